#pragma once

#include "platt/glattice.hpp"
#include "platt/module.hpp"

#include <optional>
#include <vector>

namespace platt {

/// Cohomological Mackey functor for C_{p^n}, stored on the chain of
/// subgroups U_0 ⊃ U_1 ⊃ ... ⊃ U_n with adjacent restriction/transfer maps
/// and the conjugation action of the chosen generator at every level.
struct Mackey {
    long p = 2;
    int n = 0;
    std::vector<FGModule> level; // n+1 entries
    std::vector<ModuleMap> res;  // res[k]: level k -> level k+1
    std::vector<ModuleMap> tr;   // tr[k]: level k+1 -> level k
    std::vector<ModuleMap> gamma;

    bool torsion_free() const;
    bool is_zero() const;
};

/// Verifies the cohomological Mackey axioms; throws
/// Error("AxiomViolation") naming the axiom and level.
void mackey_validate(const Mackey& x);

Mackey mackey_direct_sum(const Mackey& a, const Mackey& b);

/// Fixed-point functor of a lattice: level k = M^{U_k} in a saturated
/// basis, transfer = relative norm, conjugation = the action of g.
Mackey h0(const GLattice& m);
/// Coinvariant functor: level k = M/(g^{p^k}-1)M.
Mackey h_0(const GLattice& m);

Mackey standard_T(long p, int n);
Mackey standard_Upsilon(long p, int n);
Mackey standard_B(long p, int n);
/// Standard projective P(k) = h0(R[G/U_k]) in the explicit orbit-sum
/// basis: level j is free of rank p^min(j,k).
Mackey standard_P(long p, int n, int k);
Mackey standard_J(long p, int n, int k);
Mackey standard_S(long p, int n, int k);

/// Composite restriction level j -> level k (j <= k) / transfer k -> j.
ModuleMap res_composite(const Mackey& x, int j, int k);
ModuleMap tr_composite(const Mackey& x, int k, int j);

struct Nat {
    Mackey src, tgt;
    std::vector<ModuleMap> comp;
};

/// Checks commutation of components with res, tr and gamma; throws
/// Error("NotNatural") on failure.
void nat_validate(const Nat& phi);

Nat nat_identity(const Mackey& x);
Nat nat_compose(const Nat& outer, const Nat& inner);

/// The natural transformation P(k) -> X classified by an element of X_k
/// (one column per element; several columns give P(k)^cols -> X stacked).
/// Realizes the isomorphism nat(P(k), X) ≅ X_k.
Nat nat_from_element(const Mackey& x, int k, const Matrix& elt);

struct SectionCohomology {
    FGModule k0, k1, c0, c1;
};

/// Cohomology of the section U_j/U_k (j < k) on X: kernels/cokernels of
/// the composite restriction and transfer across the section.
SectionCohomology section_cohomology(const Mackey& x, int j, int k);

/// Tate groups of the cyclic section U_j/U_k acting on X_k through
/// gamma_k^{p^j}, as subquotients of X_k.
Subquotient section_tate_zero(const Mackey& x, int j, int k);
Subquotient section_tate_minus1(const Mackey& x, int j, int k);

/// Builds the six-term sequence 0 -> c1 -> Ĥ^{-1} -> k0 -> c0 -> Ĥ⁰ ->
/// k1 -> 0 with its canonical maps and verifies exactness everywhere;
/// throws Error("NotExact") naming the failing position.
void six_term_check(const Mackey& x, int j, int k);

struct Predicates {
    bool i_injective = false, type_h0 = false, hilbert90 = false;
    bool t_surjective = false, type_h_0 = false, co_hilbert90 = false;
};

Predicates predicates(const Mackey& x);

/// Contragredient functor: swaps res/tr (transpose), inverts gamma.
Mackey dual_star(const Mackey& x);
/// h0 of the dual lattice of the bottom level (X^⊛).
Mackey dual_yoneda(const Mackey& x);
/// Levelwise reduction X/pX (all values become 𝔽-vector spaces).
Mackey mod_p_reduced(const Mackey& x);

/// Multiplicities of the simple functors in the semisimple quotient.
std::vector<long> head(const Mackey& x);
/// Head of level k as a subquotient of X_k (exposes representative lifts).
Subquotient head_quotient(const Mackey& x, int k);

/// Ext^d against the dual-side projective indexed by k, via the three-term
/// complex X_n -> X_n -> X_k; zero for d >= 3.
FGModule ext_J(const Mackey& x, int k, int d);
/// Ext^d(B, X) for d in 0..3 via section cohomology of G/{1},
/// cross-checked against the explicit length-3 resolution of B.
FGModule ext_B(const Mackey& x, int d);

bool split_injectivity_check(const Nat& phi);
bool surjectivity_check(const Nat& phi);

/// Kernel of a natural transformation, with its inclusion.
std::pair<Mackey, Nat> nat_kernel(const Nat& phi);

struct ProjectiveCover {
    std::vector<long> mult; // P = ⊕ mult_k · P(k)
    Mackey proj;
    Nat eps; // surjection proj -> X
};

ProjectiveCover projective_cover(const Mackey& x);

/// If X ≅ ⊕ f_k P(k), returns f (with an explicitly certified iso).
std::optional<std::vector<long>> is_projective_functor(const Mackey& x);

struct MackeyResolution {
    Mackey target;
    std::vector<Mackey> projectives; // P_0 .. P_len
    Nat augmentation;                // P_0 -> target
    std::vector<Nat> differentials;  // d_i: P_i -> P_{i-1}, i = 1..len
    int length() const { return static_cast<int>(projectives.size()) - 1; }
};

/// Minimal-cover projective resolution; guaranteed length <= 3, throws
/// Error("DepthExceeded") otherwise.
MackeyResolution mackey_resolution(const Mackey& x);

} // namespace platt
