#include "platt/generate.hpp"

#include "platt/errors.hpp"

#include <algorithm>

namespace platt {

Matrix random_unimodular(long p, std::size_t r, std::mt19937_64& rng) {
    Matrix m = Matrix::identity(r);
    if (r < 2) return m;
    std::uniform_int_distribution<std::size_t> pick(0, r - 1);
    std::uniform_int_distribution<long> coef(-p * p, p * p);
    std::size_t steps = std::min<std::size_t>(2 * r, 24);
    for (std::size_t step = 0; step < steps; ++step) {
        std::size_t i = pick(rng), j = pick(rng);
        long c = coef(rng);
        if (i == j || c == 0) continue;
        Matrix e = Matrix::identity(r);
        e.at(i, j) = c;
        m = m * e;
    }
    return m;
}

std::vector<long> random_multiplicities(long p, int n, long max_rank, std::mt19937_64& rng) {
    std::vector<long> f(n + 1, 0);
    std::uniform_int_distribution<int> level(0, n);
    long rank = 0;
    while (true) {
        int k = level(rng);
        long orbit = 1;
        for (int i = 0; i < k; ++i) orbit *= p;
        if (rank + orbit > max_rank) break;
        ++f[k];
        rank += orbit;
    }
    if (rank == 0) f[0] = 1; // max_rank < 1 never happens for valid calls
    return f;
}

namespace {

GLattice conjugated_permutation(long p, int n, const std::vector<long>& f,
                                std::mt19937_64& rng) {
    GLattice base = GLattice::permutation_lattice(p, n, f);
    Matrix u = random_unimodular(p, base.rank, rng);
    return GLattice::make(p, n, u * base.action * u.inverse());
}

GLattice kernel_of_random_perm_map(long p, int n, long max_rank, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> entry(-p, p);
    for (int attempt = 0; attempt < 32; ++attempt) {
        GLattice src = GLattice::permutation_lattice(
            p, n, random_multiplicities(p, n, max_rank + 2, rng));
        GLattice tgt = GLattice::permutation_lattice(
            p, n, random_multiplicities(p, n, std::max<long>(1, max_rank / 2), rng));
        Matrix c(tgt.rank, src.rank);
        for (std::size_t i = 0; i < tgt.rank; ++i)
            for (std::size_t j = 0; j < src.rank; ++j) c.at(i, j) = Scalar(entry(rng));
        // average over the group to make the map equivariant
        Matrix equi(tgt.rank, src.rank);
        Matrix lhs = Matrix::identity(tgt.rank);
        Matrix rhs = Matrix::identity(src.rank);
        Matrix src_inv = src.action.inverse();
        long order = 1;
        for (int i = 0; i < n; ++i) order *= p;
        for (long i = 0; i < order; ++i) {
            equi = equi + lhs * c * rhs;
            lhs = tgt.action * lhs;
            rhs = rhs * src_inv;
        }
        Matrix k = kernel_basis(equi, p);
        if (k.cols() == 0 || static_cast<long>(k.cols()) > max_rank) continue;
        auto act = solve_in_span(k, src.action * k, p);
        if (!act) inconsistent("kernel lattice not stable under the action");
        return GLattice::make(p, n, *act);
    }
    inconsistent("no nonzero kernel found for any attempted map");
}

} // namespace

GLattice generate_lattice(const InstanceSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    if (spec.kind == "trivial") return GLattice::trivial(spec.p, spec.n);
    if (spec.kind == "regular") return GLattice::coset_lattice(spec.p, spec.n, spec.n);
    if (spec.kind == "augmentation") return GLattice::augmentation(spec.p, spec.n);
    if (spec.kind == "permutation+conjugate") {
        std::vector<long> f = spec.multiplicities;
        if (f.empty()) f = random_multiplicities(spec.p, spec.n, 24, rng);
        if (static_cast<int>(f.size()) != spec.n + 1)
            fail("BadSpec", "multiplicities must list levels 0..n");
        return conjugated_permutation(spec.p, spec.n, f, rng);
    }
    if (spec.kind == "kernel-of-random-perm-map")
        return kernel_of_random_perm_map(spec.p, spec.n, 24, rng);
    fail("BadSpec", "unknown instance kind: " + spec.kind);
}

GLattice random_lattice(long p, int n, long max_rank, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> which(0, 2);
    switch (which(rng)) {
    case 0:
        return conjugated_permutation(p, n, random_multiplicities(p, n, max_rank, rng), rng);
    case 1:
        return kernel_of_random_perm_map(p, n, max_rank, rng);
    default: {
        GLattice a = GLattice::augmentation(p, n);
        if (static_cast<long>(a.rank) + 1 <= max_rank) {
            GLattice b = conjugated_permutation(
                p, n, random_multiplicities(p, n, max_rank - a.rank, rng), rng);
            a = GLattice::direct_sum(a, b);
        }
        Matrix u = random_unimodular(p, a.rank, rng);
        return GLattice::make(p, n, u * a.action * u.inverse());
    }
    }
}

} // namespace platt
