#pragma once

#include "platt/glattice.hpp"
#include "platt/mackey.hpp"

#include <vector>

namespace platt {

struct Realization {
    std::vector<long> multiplicities; // copies of G/U_k per level k
    GLattice omega;                   // the permutation module R[Ω]
    Nat phi;                          // iso h0(R[Ω]) -> X, levelwise invertible
};

/// Realizes a torsion-free Hilbert-90 functor as the fixed-point functor
/// of a permutation module. Throws Error("NotHilbert90") when the
/// predicate fails and Error("CertificationFailed") when any of the
/// re-checked certificates does not hold.
Realization realize_permutation(const Mackey& x);

/// Exact sequence 0 -> R[Ω1] -> R[Ω0] -> M -> 0 of G-modules, with the
/// permutation modules in their standard coset bases.
struct PermPresentation {
    long p = 2;
    int n = 0;
    std::vector<long> omega0, omega1; // orbit counts per level
    Matrix inject;                    // R[Ω1] -> R[Ω0]
    Matrix project;                   // R[Ω0] -> M
};

/// Re-checks every invariant of the presentation against M exactly:
/// equivariance of both maps, injectivity with torsion-free cokernel,
/// surjectivity, exactness in the middle, and the rank balance.
void presentation_verify(const PermPresentation& pres, const GLattice& m);

PermPresentation present_lattice(const GLattice& m);

struct GldimReport {
    long p = 2;
    int n = 1;
    int b_length = 0;               // projective length of B, always 3
    FGModule ext3;                  // Ext^3(B, T) = R/p^n
    int max_i_injective_length = 0; // over the sample, <= 2
    int max_h0_length = 0;          // over the sample, <= 1
};

/// Witnesses for the global-dimension bounds; throws
/// Error("WitnessFailed") when any bound is violated.
GldimReport gldim_witness(long p, int n);

} // namespace platt
