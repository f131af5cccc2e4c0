#pragma once

#include "platt/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace platt {

/// Dense matrix over the field of fractions of R. Zero-dimensional
/// matrices are first-class: a 0xk or kx0 matrix is the unique map
/// involving the zero module.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix scalar(std::size_t n, const Scalar& c);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& other) const;

    Matrix col(std::size_t j) const;
    Matrix cols_subset(const std::vector<std::size_t>& idx) const;
    Matrix rows_subset(const std::vector<std::size_t>& idx) const;

    /// Horizontal concatenation [this | other]; rows must agree.
    Matrix hcat(const Matrix& other) const;
    /// Vertical concatenation; columns must agree.
    Matrix vcat(const Matrix& other) const;

    /// Matrix power for square matrices, exponent >= 0.
    Matrix pow(long long e) const;

    /// Exact inverse by Gaussian elimination over the fraction field;
    /// requires square nonsingular.
    Matrix inverse() const;

    bool is_zero() const;
    bool all_integral(long p) const;

    /// Minimum valuation of determinant sanity check helper: true when the
    /// matrix is square, integral and has unit determinant (invertible over R).
    bool is_unimodular(long p) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

/// Smith normal form over the local PID R: left * A * right = diag(p^d_i)
/// with d_1 <= d_2 <= ... (kInfVal marks zero diagonal entries). left and
/// right are invertible over R; their exact inverses are carried along.
struct SNFDecomposition {
    Matrix left, left_inv, right, right_inv;
    std::vector<int> diag; // length min(rows, cols)
    std::size_t rank = 0;  // number of finite diagonal entries

    Matrix reassemble(std::size_t rows, std::size_t cols, long p) const;
};

SNFDecomposition smith_normal_form(const Matrix& a, long p);

/// Basis of the free R-module { x : A x = 0 } (columns).
Matrix kernel_basis(const Matrix& a, long p);

/// Basis (columns) of the column span of A as an R-lattice.
Matrix lattice_basis(const Matrix& a, long p);

/// Solve A Y = B over R. Returns nullopt when some column of B is not in
/// the R-span of the columns of A.
std::optional<Matrix> solve_in_span(const Matrix& a, const Matrix& b, long p);

/// Lattice equality: the column spans of A and B agree as R-submodules.
bool spans_equal(const Matrix& a, const Matrix& b, long p);

/// Matrix over the residue field F = R/pR, entries in [0, p).
class FMatrix {
public:
    FMatrix() = default;
    FMatrix(long p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    long p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    long& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    long at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    FMatrix operator*(const FMatrix& other) const;
    bool operator==(const FMatrix& other) const;
    std::size_t rank() const;

private:
    long p_ = 2;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<long> data_;
};

} // namespace platt
