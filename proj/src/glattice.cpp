#include "platt/glattice.hpp"

#include "platt/errors.hpp"

#include <string>

namespace platt {

GLattice GLattice::make(long p, int n, Matrix action) {
    if (p < 2 || n < 0) fail("BadSpec", "invalid (p, n)");
    if (action.rows() != action.cols()) fail("ShapeMismatch", "action matrix not square");
    if (!action.all_integral(p)) fail("NotPPowerOrder", "action has entries outside R");
    long long order = static_cast<long long>(pow_int(p, n));
    if (!(action.pow(order) == Matrix::identity(action.rows())))
        fail("NotPPowerOrder", "action^(p^n) != identity");
    return GLattice{p, n, action.rows(), std::move(action)};
}

GLattice GLattice::direct_sum(const GLattice& a, const GLattice& b) {
    if (a.p != b.p || a.n != b.n) fail("ShapeMismatch", "direct sum of lattices over different groups");
    Matrix m(a.rank + b.rank, a.rank + b.rank);
    for (std::size_t i = 0; i < a.rank; ++i)
        for (std::size_t j = 0; j < a.rank; ++j) m.at(i, j) = a.action.at(i, j);
    for (std::size_t i = 0; i < b.rank; ++i)
        for (std::size_t j = 0; j < b.rank; ++j) m.at(a.rank + i, a.rank + j) = b.action.at(i, j);
    return GLattice{a.p, a.n, a.rank + b.rank, std::move(m)};
}

GLattice GLattice::coset_lattice(long p, int n, int k) {
    if (k < 0 || k > n) fail("BadIndex", "coset level out of range");
    std::size_t r = static_cast<std::size_t>(static_cast<long long>(pow_int(p, k)));
    Matrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) m.at((i + 1) % r, i) = 1;
    return GLattice{p, n, r, std::move(m)};
}

GLattice GLattice::permutation_lattice(long p, int n, const std::vector<long>& f) {
    if (f.size() != static_cast<std::size_t>(n + 1)) fail("BadSpec", "multiplicity vector length");
    GLattice out{p, n, 0, Matrix(0, 0)};
    for (int k = 0; k <= n; ++k)
        for (long c = 0; c < f[k]; ++c) out = direct_sum(out, coset_lattice(p, n, k));
    return out;
}

GLattice GLattice::augmentation(long p, int n) {
    std::size_t r = static_cast<std::size_t>(static_cast<long long>(pow_int(p, n))) - 1;
    // g·(g^i - 1) = (g^{i+1} - 1) - (g - 1), wrapping g^{p^n} to 1
    Matrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        if (i + 1 < r) m.at(i + 1, i) = 1;
        m.at(0, i) -= 1;
    }
    return make(p, n, std::move(m));
}

void GLattice::check_level(int k) const {
    if (k < 0 || k > n) fail("BadIndex", "subgroup index " + std::to_string(k));
}

Matrix GLattice::subgroup_generator(int k) const {
    check_level(k);
    return action.pow(static_cast<long long>(pow_int(p, k)));
}

Matrix GLattice::norm(int k) const { return relative_norm(k, n); }

Matrix GLattice::relative_norm(int j, int k) const {
    check_level(j);
    check_level(k);
    if (j > k) fail("BadIndex", "relative norm needs j <= k");
    Matrix step = subgroup_generator(j);
    long long terms = static_cast<long long>(pow_int(p, k - j));
    Matrix sum(rank, rank), power = Matrix::identity(rank);
    for (long long i = 0; i < terms; ++i) {
        sum = sum + power;
        power = power * step;
    }
    return sum;
}

GLattice GLattice::dual() const { return GLattice{p, n, rank, action.inverse().transpose()}; }

GLattice GLattice::conjugate(const Matrix& t) const {
    if (!t.is_unimodular(p)) fail("BadSpec", "conjugation by a non-unimodular matrix");
    return GLattice{p, n, rank, t * action * t.inverse()};
}

ModuleMap fixed_points(const GLattice& m, int k) {
    Matrix a = m.subgroup_generator(k) - Matrix::identity(m.rank);
    Matrix basis = kernel_basis(a, m.p); // saturated: kernel into torsion-free
    return ModuleMap::make(FGModule::free_module(m.p, basis.cols()), m.module(), basis);
}

Subquotient coinvariants(const GLattice& m, int k) {
    Matrix a = m.subgroup_generator(k) - Matrix::identity(m.rank);
    return quotient_by(m.module(), a);
}

FGModule tate(const GLattice& m, int k, int degree) {
    if (degree != -1 && degree != 0 && degree != 1) fail("BadIndex", "tate degree");
    Matrix aug = m.subgroup_generator(k) - Matrix::identity(m.rank);
    Matrix nrm = m.norm(k);
    Subquotient sq = (degree == 0)
                         ? make_subquotient(m.module(), kernel_basis(aug, m.p), nrm)
                         : make_subquotient(m.module(), kernel_basis(nrm, m.p), aug);
    if (sq.mod.free_rank != 0) inconsistent("Tate group has a free part");
    return sq.mod;
}

PermVerdict is_permutation(const GLattice& m) {
    PermVerdict v;
    bool torsion_free = true, h1_vanishes = true;
    for (int k = 0; k <= m.n; ++k) {
        auto co = coinvariants(m, k);
        v.level_torsion.push_back(co.mod.torsion);
        if (!co.mod.is_torsion_free()) torsion_free = false;
        if (!tate(m, k, 1).is_zero()) h1_vanishes = false;
    }
    if (torsion_free != h1_vanishes)
        inconsistent("coinvariant-torsion and H^1 criteria disagree");
    v.value = torsion_free;
    return v;
}

std::vector<long> perm_multiplicities(const GLattice& m) {
    if (!is_permutation(m).value) fail("NotPermutation", "lattice is not a permutation lattice");
    std::size_t d = static_cast<std::size_t>(m.n + 1);
    Matrix sys(d, d), rhs(d, 1);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k)
            sys.at(j, k) = Scalar(pow_int(m.p, static_cast<long long>(std::min(j, k))));
        rhs.at(j, 0) = Scalar(fixed_points(m, static_cast<int>(j)).dom.free_rank);
    }
    Matrix sol = sys.inverse() * rhs;
    std::vector<long> f(d);
    Int total = 0;
    for (std::size_t k = 0; k < d; ++k) {
        const Scalar& x = sol.at(k, 0);
        if (denominator(x) != 1 || numerator(x) < 0)
            fail("NonIntegralSolution", "multiplicity system has no nonnegative integer solution");
        f[k] = static_cast<long>(numerator(x));
        total += numerator(x) * pow_int(m.p, static_cast<long long>(k));
    }
    if (total != Int(m.rank)) fail("NonIntegralSolution", "rank balance violated");
    return f;
}

WeissReport weiss_check(const GLattice& m, int mlevel) {
    m.check_level(mlevel);
    WeissReport r;
    // (i) restriction to U_m ≅ C_{p^{n-m}}, generated by g^{p^m}
    GLattice res = GLattice::make(m.p, m.n - mlevel, m.subgroup_generator(mlevel));
    r.restriction_perm = is_permutation(res).value;
    // (ii) the fixed sublattice M^{U_m} as a lattice for G/U_m ≅ C_{p^m}
    ModuleMap emb = fixed_points(m, mlevel);
    auto act = solve_in_span(emb.mat, m.action * emb.mat, m.p);
    if (!act) inconsistent("fixed sublattice is not g-stable");
    GLattice fixed = GLattice::make(m.p, mlevel, *act);
    r.fixed_perm = is_permutation(fixed).value;
    r.applicable = r.restriction_perm && r.fixed_perm;
    r.conclusion = is_permutation(m).value;
    if (r.applicable && !r.conclusion)
        inconsistent("both descent hypotheses hold but the lattice is not permutation");
    return r;
}

std::array<bool, 3> elequi_triple(const GLattice& m, int k) {
    bool dual_h1 = tate(m.dual(), k, 1).is_zero();
    bool h_minus1 = tate(m, k, -1).is_zero();
    bool tf = coinvariants(m, k).mod.is_torsion_free();
    return {dual_h1, h_minus1, tf};
}

} // namespace platt
