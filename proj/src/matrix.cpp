#include "platt/matrix.hpp"

#include "platt/errors.hpp"

#include <utility>

namespace platt {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::scalar(std::size_t n, const Scalar& c) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) fail("ShapeMismatch", "ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) fail("ShapeMismatch", "matrix product shapes");
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) fail("ShapeMismatch", "matrix sum shapes");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) fail("ShapeMismatch", "matrix difference shapes");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

Matrix Matrix::col(std::size_t j) const {
    Matrix out(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) out.at(i, 0) = at(i, j);
    return out;
}

Matrix Matrix::cols_subset(const std::vector<std::size_t>& idx) const {
    Matrix out(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) out.at(i, j) = at(i, idx[j]);
    return out;
}

Matrix Matrix::rows_subset(const std::vector<std::size_t>& idx) const {
    Matrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(idx[i], j);
    return out;
}

Matrix Matrix::hcat(const Matrix& other) const {
    if (rows_ != other.rows_) fail("ShapeMismatch", "hcat row counts");
    Matrix out(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, cols_ + j) = other.at(i, j);
    }
    return out;
}

Matrix Matrix::vcat(const Matrix& other) const {
    if (cols_ != other.cols_) fail("ShapeMismatch", "vcat column counts");
    Matrix out(rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(rows_ + i, j) = other.at(i, j);
    return out;
}

Matrix Matrix::pow(long long e) const {
    if (rows_ != cols_) fail("ShapeMismatch", "power of non-square matrix");
    if (e < 0) fail("ShapeMismatch", "negative matrix power");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) fail("Singular", "inverse of non-square matrix");
    std::size_t n = rows_;
    Matrix a = *this, inv = identity(n);
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t piv = t;
        while (piv < n && a.at(piv, t) == 0) ++piv;
        if (piv == n) fail("Singular", "matrix is singular");
        if (piv != t)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(t, j), a.at(piv, j));
                std::swap(inv.at(t, j), inv.at(piv, j));
            }
        Scalar d = a.at(t, t);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(t, j) /= d;
            inv.at(t, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == t) continue;
            Scalar f = a.at(i, t);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(t, j);
                inv.at(i, j) -= f * inv.at(t, j);
            }
        }
    }
    return inv;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool Matrix::all_integral(long p) const {
    for (const auto& x : data_)
        if (!is_integral(x, p)) return false;
    return true;
}

bool Matrix::is_unimodular(long p) const {
    if (rows_ != cols_) return false;
    if (!all_integral(p)) return false;
    auto snf = smith_normal_form(*this, p);
    if (snf.rank != rows_) return false;
    for (int d : snf.diag)
        if (d != 0) return false;
    return true;
}

Matrix SNFDecomposition::reassemble(std::size_t rows, std::size_t cols, long p) const {
    Matrix d(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i)
        if (diag[i] != kInfVal) d.at(i, i) = Scalar(pow_int(p, diag[i]));
    return left_inv * d * right_inv;
}

SNFDecomposition smith_normal_form(const Matrix& a, long p) {
    std::size_t m = a.rows(), n = a.cols();
    Matrix work = a;
    SNFDecomposition out;
    out.left = Matrix::identity(m);
    out.left_inv = Matrix::identity(m);
    out.right = Matrix::identity(n);
    out.right_inv = Matrix::identity(n);
    std::size_t steps = std::min(m, n);
    out.diag.assign(steps, kInfVal);

    for (std::size_t t = 0; t < steps; ++t) {
        // pivot: any entry of minimal p-adic valuation in the trailing block
        int best = kInfVal;
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                int v = valuation(work.at(i, j), p);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best == kInfVal) break; // trailing block is zero
        if (bi != t) {
            for (std::size_t j = 0; j < n; ++j) std::swap(work.at(t, j), work.at(bi, j));
            for (std::size_t j = 0; j < m; ++j) {
                std::swap(out.left.at(t, j), out.left.at(bi, j));
                std::swap(out.left_inv.at(j, t), out.left_inv.at(j, bi));
            }
        }
        if (bj != t) {
            for (std::size_t i = 0; i < m; ++i) std::swap(work.at(i, t), work.at(i, bj));
            for (std::size_t i = 0; i < n; ++i) {
                std::swap(out.right.at(i, t), out.right.at(i, bj));
                std::swap(out.right_inv.at(t, i), out.right_inv.at(bj, i));
            }
        }
        // normalize the pivot to exactly p^v by dividing out its unit part
        Scalar pv = Scalar(pow_int(p, best));
        Scalar u = work.at(t, t) / pv;
        for (std::size_t j = 0; j < n; ++j) work.at(t, j) /= u;
        for (std::size_t j = 0; j < m; ++j) {
            out.left.at(t, j) /= u;
            out.left_inv.at(j, t) *= u;
        }
        // clear the pivot column; quotients are in R since the pivot
        // valuation is minimal
        for (std::size_t i = 0; i < m; ++i) {
            if (i == t) continue;
            Scalar f = work.at(i, t) / pv;
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) work.at(i, j) -= f * work.at(t, j);
            for (std::size_t j = 0; j < m; ++j) {
                out.left.at(i, j) -= f * out.left.at(t, j);
                out.left_inv.at(j, t) += f * out.left_inv.at(j, i);
            }
        }
        // clear the pivot row
        for (std::size_t j = 0; j < n; ++j) {
            if (j == t) continue;
            Scalar f = work.at(t, j) / pv;
            if (f == 0) continue;
            for (std::size_t i = 0; i < m; ++i) work.at(i, j) -= f * work.at(i, t);
            for (std::size_t i = 0; i < n; ++i) {
                out.right.at(i, j) -= f * out.right.at(i, t);
                out.right_inv.at(t, i) += f * out.right_inv.at(j, i);
            }
        }
        out.diag[t] = best;
        ++out.rank;
    }
    for (std::size_t i = 1; i < out.rank; ++i)
        if (out.diag[i] < out.diag[i - 1]) inconsistent("SNF diagonal not sorted");
    return out;
}

Matrix kernel_basis(const Matrix& a, long p) {
    auto snf = smith_normal_form(a, p);
    std::vector<std::size_t> idx;
    for (std::size_t j = snf.rank; j < a.cols(); ++j) idx.push_back(j);
    return snf.right.cols_subset(idx);
}

Matrix lattice_basis(const Matrix& a, long p) {
    auto snf = smith_normal_form(a, p);
    Matrix out(a.rows(), snf.rank);
    for (std::size_t j = 0; j < snf.rank; ++j) {
        Scalar pv = Scalar(pow_int(p, snf.diag[j]));
        for (std::size_t i = 0; i < a.rows(); ++i) out.at(i, j) = snf.left_inv.at(i, j) * pv;
    }
    return out;
}

std::optional<Matrix> solve_in_span(const Matrix& a, const Matrix& b, long p) {
    if (a.rows() != b.rows()) fail("ShapeMismatch", "solve_in_span row counts");
    auto snf = smith_normal_form(a, p);
    Matrix c = snf.left * b;
    Matrix z(a.cols(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (i < snf.rank) {
                Scalar q = c.at(i, j) / Scalar(pow_int(p, snf.diag[i]));
                if (!is_integral(q, p)) return std::nullopt;
                z.at(i, j) = q;
            } else if (c.at(i, j) != 0) {
                return std::nullopt;
            }
        }
    }
    return snf.right * z;
}

bool spans_equal(const Matrix& a, const Matrix& b, long p) {
    return solve_in_span(a, b, p).has_value() && solve_in_span(b, a, p).has_value();
}

namespace {
long mod_inverse(long a, long p) {
    long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
    while (newr != 0) {
        long q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) fail("Singular", "no inverse mod p");
    return ((t % p) + p) % p;
}
} // namespace

FMatrix FMatrix::operator*(const FMatrix& other) const {
    if (cols_ != other.rows_ || p_ != other.p_) fail("ShapeMismatch", "FMatrix product");
    FMatrix out(p_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            long a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) = (out.at(i, j) + a * other.at(k, j)) % p_;
        }
    return out;
}

bool FMatrix::operator==(const FMatrix& other) const {
    return p_ == other.p_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::size_t FMatrix::rank() const {
    FMatrix a = *this;
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols_ && r < rows_; ++j) {
        std::size_t piv = r;
        while (piv < rows_ && a.at(piv, j) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t k = 0; k < cols_; ++k) std::swap(a.at(r, k), a.at(piv, k));
        long inv = mod_inverse(a.at(r, j), p_);
        for (std::size_t k = 0; k < cols_; ++k) a.at(r, k) = (a.at(r, k) * inv) % p_;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            long f = a.at(i, j);
            if (f == 0) continue;
            for (std::size_t k = 0; k < cols_; ++k)
                a.at(i, k) = ((a.at(i, k) - f * a.at(r, k)) % p_ + p_) % p_;
        }
        ++r;
    }
    return r;
}

} // namespace platt
