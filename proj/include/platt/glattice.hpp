#pragma once

#include "platt/module.hpp"

#include <array>
#include <vector>

namespace platt {

/// An R[G]-lattice for G = C_{p^n}, stored as the matrix of a fixed
/// generator g acting on R^rank. Subgroups are indexed by the exponent of
/// their index: U_k has index p^k, so U_0 = G and U_n = {1}.
struct GLattice {
    long p = 2;
    int n = 0;
    std::size_t rank = 0;
    Matrix action;

    /// Validates action^{p^n} = I exactly; throws Error("NotPPowerOrder").
    static GLattice make(long p, int n, Matrix action);
    static GLattice trivial(long p, int n) { return make(p, n, Matrix::identity(1)); }
    static GLattice direct_sum(const GLattice& a, const GLattice& b);
    /// Regular representation of G/U_k: cyclic permutation of the p^k cosets.
    static GLattice coset_lattice(long p, int n, int k);
    /// ⊕_k f_k · R[G/U_k].
    static GLattice permutation_lattice(long p, int n, const std::vector<long>& f);
    /// Augmentation sublattice ω ⊂ R[G], basis g^i - 1 for 1 <= i < p^n.
    static GLattice augmentation(long p, int n);

    FGModule module() const { return FGModule::free_module(p, rank); }
    /// Matrix of the generator g^{p^k} of U_k.
    Matrix subgroup_generator(int k) const;
    /// Norm element of U_k: sum of action^{j·p^k} over j < p^{n-k}.
    Matrix norm(int k) const;
    /// Relative norm from U_k-fixed to U_j-fixed vectors (j < k): sum of
    /// action^{i·p^j} over i < p^{k-j}.
    Matrix relative_norm(int j, int k) const;
    /// Contragredient lattice: transpose of the inverse action.
    GLattice dual() const;
    GLattice conjugate(const Matrix& t) const;

    void check_level(int k) const;
};

/// Saturated sublattice of U_k-fixed vectors, as an embedding into M.
ModuleMap fixed_points(const GLattice& m, int k);

/// M / (g^{p^k} - 1)M with its projection.
Subquotient coinvariants(const GLattice& m, int k);

/// Tate cohomology of U_k acting on M in degree -1, 0 or 1 (degree 1 via
/// 2-periodicity). Always a finite p-group.
FGModule tate(const GLattice& m, int k, int degree);

struct PermVerdict {
    bool value = false;
    std::vector<std::vector<int>> level_torsion; // coinvariant torsion per k
};

/// Decides whether M is a permutation lattice by torsion-freeness of all
/// coinvariants, cross-checked against vanishing of H^1 at every level.
PermVerdict is_permutation(const GLattice& m);

/// Multiplicities (f_0..f_n) with M ≅ ⊕ f_k R[G/U_k]; requires a
/// permutation lattice.
std::vector<long> perm_multiplicities(const GLattice& m);

struct WeissReport {
    bool restriction_perm = false; // M restricted to U_m is permutation
    bool fixed_perm = false;       // M^{U_m} is a permutation G/U_m-lattice
    bool applicable = false;       // both hypotheses hold
    bool conclusion = false;       // is_permutation(M)
};

WeissReport weiss_check(const GLattice& m, int mlevel);

/// (H^1(U_k, M^*) = 0, Ĥ^{-1}(U_k, M) = 0, coinvariants torsion-free);
/// the three are equivalent and the implementation checks all of them.
std::array<bool, 3> elequi_triple(const GLattice& m, int k);

} // namespace platt
