#pragma once

#include "platt/mackey.hpp"
#include "platt/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace platt {

/// Functor on the chain category with vertices 0..n and up/down morphisms
/// whose two composites both equal p.
struct GentleFunctor {
    long p = 2;
    int n = 0;
    std::vector<FGModule> vertex; // n+1
    std::vector<ModuleMap> down;  // down[k]: vertex k+1 -> vertex k
    std::vector<ModuleMap> up;    // up[k]: vertex k -> vertex k+1

    bool torsion_free() const;
    bool is_zero() const;
};

/// Verifies down∘up = up∘down = p at every edge; throws
/// Error("RelationViolation") naming the edge.
void gentle_validate(const GentleFunctor& f);

GentleFunctor gentle_zero(long p, int n);
GentleFunctor gentle_direct_sum(const GentleFunctor& a, const GentleFunctor& b);
/// Transposes all maps and swaps up/down (reverses the arrow diagram).
GentleFunctor gentle_dual(const GentleFunctor& f);

GentleFunctor gentle_P(long p, int n, int l);
GentleFunctor gentle_J(long p, int n, int l);

/// Common rank of the (torsion-free) vertices; throws
/// Error("RankMismatch") when they differ.
std::size_t gentle_rank(const GentleFunctor& f);

/// Direction word of a rank-1 lattice functor: edge k is down-iso ('<',
/// drawn pointing toward 0) when down_k is an isomorphism, up-iso ('>')
/// otherwise.
struct ArrowDiagram {
    std::vector<bool> down_iso; // length n

    int n() const { return static_cast<int>(down_iso.size()); }
    std::string str() const;
    static ArrowDiagram parse(const std::string& s);
    bool operator==(const ArrowDiagram& o) const { return down_iso == o.down_iso; }
};

ArrowDiagram diagram_of(const GentleFunctor& f);
/// Normalized rank-1 realization: all vertices R, maps in {1, p}.
GentleFunctor functor_of(long p, const ArrowDiagram& d);

/// Local maxima / minima of the direction word (boundary vertices may be
/// maxima only).
std::pair<std::vector<int>, std::vector<int>> max_min(const ArrowDiagram& d);

struct WedgeResult {
    ArrowDiagram diagram;
    int s = 0; // smallest maximum
    int t = 0; // smallest minimum
};

/// Redirects all edges left of the smallest minimum downward; defined for
/// non-projective diagrams only (throws Error("IsProjective")).
WedgeResult wedge(const ArrowDiagram& d);

struct GentleNat {
    GentleFunctor src, tgt;
    std::vector<ModuleMap> comp;
};

void gentle_nat_validate(const GentleNat& phi);
GentleNat gentle_nat_compose(const GentleNat& outer, const GentleNat& inner);

/// The natural map P^l -> F classified by columns of elt in F(l).
GentleNat gentle_nat_from_element(const GentleFunctor& f, int l, const Matrix& elt);

struct RankOneSES {
    GentleFunctor sub;    // ≅ P^t
    GentleFunctor middle; // ≅ P^s ⊕ F-wedge
    GentleNat psi;        // sub -> middle
    GentleNat phi;        // middle -> F
    int s = 0, t = 0;
};

/// The short exact sequence 0 -> P^t -> P^s ⊕ F^∧ -> F -> 0 of a
/// non-projective rank-1 functor given in normalized form.
RankOneSES rank1_ses(const GentleFunctor& f);

struct GentleResolution {
    GentleFunctor q1, q0;
    GentleNat alpha; // q1 -> q0
    GentleNat beta;  // q0 -> F
    std::vector<int> q1_levels, q0_levels; // ordered P-summand indices
};

/// Length <= 1 resolution of a rank-1 functor with Q0/Q1 matching the
/// maxima/minima of its diagram.
GentleResolution rank1_resolution(const GentleFunctor& f);

struct RankOneSub {
    GentleFunctor sub; // rank-1, normalized vertex modules R
    GentleNat incl;    // saturated embedding into F
};

/// A saturated rank-1 subfunctor (iterating filters F with rank-1 lattice
/// quotients).
RankOneSub saturated_rank1_sub(const GentleFunctor& f);

/// Projective resolution of an arbitrary lattice functor by filtration and
/// the horseshoe construction; always length <= 1.
GentleResolution gentle_resolution(const GentleFunctor& f);

std::vector<long> gentle_head(const GentleFunctor& f);
std::optional<std::vector<long>> gentle_is_projective(const GentleFunctor& f);

/// Levelwise full-group coinvariants of a Mackey functor, with down/up
/// induced by transfer/restriction.
GentleFunctor deflate(const Mackey& x);
/// Pullback along the projection: gamma = id, res/tr = up/down.
Mackey inflate(const GentleFunctor& f);
/// Deflation of a natural transformation.
GentleNat deflate_nat(const Nat& phi);

} // namespace platt
