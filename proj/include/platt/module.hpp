#pragma once

#include "platt/matrix.hpp"
#include "platt/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace platt {

/// Finitely generated module over R in canonical form:
/// R^free_rank ⊕ R/p^{e_1} ⊕ ... with e_1 >= e_2 >= ... >= 1.
/// Generator order: free generators first, then torsion.
struct FGModule {
    long p = 2;
    std::size_t free_rank = 0;
    std::vector<int> torsion;

    static FGModule free_module(long p, std::size_t r) { return {p, r, {}}; }
    static FGModule zero(long p) { return {p, 0, {}}; }
    static FGModule direct_sum(const FGModule& a, const FGModule& b);

    std::size_t gens() const { return free_rank + torsion.size(); }
    bool is_torsion_free() const { return torsion.empty(); }
    bool is_zero() const { return gens() == 0; }
    /// p-power exponent of generator j; kInfVal for a free generator.
    int gen_exp(std::size_t j) const {
        return j < free_rank ? kInfVal : torsion[j - free_rank];
    }
    /// Relation matrix of the presentation R^gens ->> this (gens x #torsion).
    Matrix relations() const;
    void check_canonical() const;

    bool operator==(const FGModule& o) const {
        return p == o.p && free_rank == o.free_rank && torsion == o.torsion;
    }
};

/// Morphism between FGModules in their canonical presentations. Entries in
/// torsion codomain rows are stored reduced mod the row order.
struct ModuleMap {
    FGModule dom, cod;
    Matrix mat; // cod.gens() x dom.gens()

    /// Validates well-definedness; throws Error("IllDefined") naming the
    /// offending (row, col). Reduces entries to canonical representatives.
    static ModuleMap make(FGModule dom, FGModule cod, Matrix entries);
    static ModuleMap identity(const FGModule& m);
    static ModuleMap zero(FGModule dom, FGModule cod);
    static ModuleMap direct_sum(const ModuleMap& a, const ModuleMap& b);

    /// this ∘ inner (inner first).
    ModuleMap compose(const ModuleMap& inner) const;
    ModuleMap operator*(const ModuleMap& inner) const { return compose(inner); }
    ModuleMap operator+(const ModuleMap& other) const;
    ModuleMap scaled(const Scalar& c) const;
    ModuleMap pow(long long e) const;

    bool is_zero_map() const { return mat.is_zero(); }
    bool operator==(const ModuleMap& o) const {
        return dom == o.dom && cod == o.cod && mat == o.mat;
    }
};

/// A subquotient (V + rel)/(W + rel) of an ambient FGModule, carried with
/// enough data to map ambient elements to subquotient coordinates and back.
struct Subquotient {
    long p = 2;
    FGModule amb;  // ambient module
    FGModule mod;  // canonical form of the subquotient
    Matrix basis;  // lattice basis of V + rel in the free cover of amb
    Matrix ly;     // row-operation part of the denominator SNF
    std::vector<std::size_t> kept; // output coordinate rows, in generator order
    Matrix lift;   // amb.gens() x mod.gens(): chosen representatives

    /// Coordinates of ambient columns x in the subquotient (each column of x
    /// must lie in V + rel; throws Error("NotInSubmodule") otherwise).
    Matrix coords(const Matrix& x) const;
    /// The map amb -> mod when V + rel is everything (i.e. a quotient).
    ModuleMap projection() const;
    /// The map mod -> amb given by the chosen representatives.
    ModuleMap embedding() const;
};

Subquotient make_subquotient(const FGModule& amb, const Matrix& num, const Matrix& den);
Subquotient submodule(const FGModule& amb, const Matrix& num);
Subquotient quotient_by(const FGModule& amb, const Matrix& den);

/// Generators (in the free cover of f.dom, together with dom relations) of
/// the kernel of f.
Matrix kernel_numerator(const ModuleMap& f);

Subquotient kernel(const ModuleMap& f);
Subquotient image(const ModuleMap& f);
Subquotient cokernel(const ModuleMap& f);

/// Map between subquotients induced by an ambient map sub.amb -> quo.amb
/// given by the plain matrix `ambient` on free covers.
ModuleMap induced_map(const Subquotient& from, const Subquotient& to, const Matrix& ambient);

/// Composite zero and image(f) = kernel(g) as submodules of f.cod.
bool is_exact(const ModuleMap& f, const ModuleMap& g);

/// Saturation of an embedded submodule of a torsion-free module: smallest
/// overmodule with torsion-free quotient. Input and output are embeddings.
ModuleMap saturation(const ModuleMap& sub);

/// Induced map M/pM -> N/pN over the residue field.
FMatrix mod_p_reduce(const ModuleMap& f);

} // namespace platt
