#include "platt/module.hpp"

#include "platt/errors.hpp"

#include <algorithm>
#include <string>

namespace platt {

FGModule FGModule::direct_sum(const FGModule& a, const FGModule& b) {
    if (a.p != b.p) fail("ShapeMismatch", "direct sum over different primes");
    FGModule out{a.p, a.free_rank + b.free_rank, a.torsion};
    out.torsion.insert(out.torsion.end(), b.torsion.begin(), b.torsion.end());
    std::sort(out.torsion.begin(), out.torsion.end(), std::greater<int>());
    return out;
}

Matrix FGModule::relations() const {
    Matrix rel(gens(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i)
        rel.at(free_rank + i, i) = Scalar(pow_int(p, torsion[i]));
    return rel;
}

void FGModule::check_canonical() const {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 1) fail("BadModule", "torsion exponent < 1");
        if (i && torsion[i] > torsion[i - 1]) fail("BadModule", "torsion exponents not sorted");
    }
}

ModuleMap ModuleMap::make(FGModule dom, FGModule cod, Matrix entries) {
    if (dom.p != cod.p) fail("ShapeMismatch", "map between modules over different primes");
    if (entries.rows() != cod.gens() || entries.cols() != dom.gens())
        fail("ShapeMismatch", "map matrix shape");
    long p = dom.p;
    for (std::size_t i = 0; i < entries.rows(); ++i) {
        int f = cod.gen_exp(i);
        for (std::size_t j = 0; j < entries.cols(); ++j) {
            Scalar& a = entries.at(i, j);
            if (!is_integral(a, p))
                fail("IllDefined", "non-integral entry at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
            if (f != kInfVal) a = reduce_mod(a, p, f);
            int e = dom.gen_exp(j);
            if (e == kInfVal) continue;
            bool ok = (f == kInfVal) ? (a == 0) : (f <= e || valuation(a, p) >= f - e);
            if (!ok)
                fail("IllDefined", "torsion incompatibility at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
        }
    }
    return ModuleMap{std::move(dom), std::move(cod), std::move(entries)};
}

ModuleMap ModuleMap::identity(const FGModule& m) {
    return make(m, m, Matrix::identity(m.gens()));
}

ModuleMap ModuleMap::zero(FGModule dom, FGModule cod) {
    Matrix z(cod.gens(), dom.gens());
    return make(std::move(dom), std::move(cod), std::move(z));
}

ModuleMap ModuleMap::direct_sum(const ModuleMap& a, const ModuleMap& b) {
    // generator order of a direct sum interleaves (free of a, free of b,
    // torsion merged sorted); build the coordinate permutations explicitly.
    FGModule dom = FGModule::direct_sum(a.dom, b.dom);
    FGModule cod = FGModule::direct_sum(a.cod, b.cod);
    auto slot_map = [](const FGModule& x, const FGModule& y, const FGModule& sum) {
        // positions of x's then y's generators inside sum
        std::vector<std::size_t> pos(x.gens() + y.gens());
        for (std::size_t i = 0; i < x.free_rank; ++i) pos[i] = i;
        for (std::size_t i = 0; i < y.free_rank; ++i) pos[x.gens() + i] = x.free_rank + i;
        // torsion: stable merge of the two sorted lists
        std::size_t ti = 0, tj = 0, slot = sum.free_rank;
        while (ti < x.torsion.size() || tj < y.torsion.size()) {
            bool take_x = tj == y.torsion.size() ||
                          (ti < x.torsion.size() && x.torsion[ti] >= y.torsion[tj]);
            if (take_x)
                pos[x.free_rank + ti++] = slot++;
            else
                pos[x.gens() + y.free_rank + tj++] = slot++;
        }
        return pos;
    };
    auto dpos = slot_map(a.dom, b.dom, dom);
    auto cpos = slot_map(a.cod, b.cod, cod);
    Matrix m(cod.gens(), dom.gens());
    for (std::size_t i = 0; i < a.cod.gens(); ++i)
        for (std::size_t j = 0; j < a.dom.gens(); ++j)
            m.at(cpos[i], dpos[j]) = a.mat.at(i, j);
    for (std::size_t i = 0; i < b.cod.gens(); ++i)
        for (std::size_t j = 0; j < b.dom.gens(); ++j)
            m.at(cpos[a.cod.gens() + i], dpos[a.dom.gens() + j]) = b.mat.at(i, j);
    return make(std::move(dom), std::move(cod), std::move(m));
}

ModuleMap ModuleMap::compose(const ModuleMap& inner) const {
    if (!(inner.cod == dom)) fail("ShapeMismatch", "composition through different modules");
    return make(inner.dom, cod, mat * inner.mat);
}

ModuleMap ModuleMap::operator+(const ModuleMap& other) const {
    if (!(dom == other.dom) || !(cod == other.cod)) fail("ShapeMismatch", "sum of maps");
    return make(dom, cod, mat + other.mat);
}

ModuleMap ModuleMap::scaled(const Scalar& c) const { return make(dom, cod, mat.scaled(c)); }

ModuleMap ModuleMap::pow(long long e) const {
    if (!(dom == cod)) fail("ShapeMismatch", "power of non-endomorphism");
    ModuleMap result = identity(dom);
    ModuleMap base = *this;
    while (e > 0) {
        if (e & 1) result = result.compose(base);
        base = base.compose(base);
        e >>= 1;
    }
    return result;
}

Matrix Subquotient::coords(const Matrix& x) const {
    auto y = solve_in_span(basis, x, p);
    if (!y) fail("NotInSubmodule", "element outside the subquotient numerator");
    Matrix z = ly * *y;
    Matrix out = z.rows_subset(kept);
    for (std::size_t i = 0; i < out.rows(); ++i) {
        int e = mod.gen_exp(i);
        if (e == kInfVal) continue;
        for (std::size_t j = 0; j < out.cols(); ++j)
            out.at(i, j) = reduce_mod(out.at(i, j), p, e);
    }
    return out;
}

ModuleMap Subquotient::projection() const {
    return ModuleMap::make(amb, mod, coords(Matrix::identity(amb.gens())));
}

ModuleMap Subquotient::embedding() const { return ModuleMap::make(mod, amb, lift); }

Subquotient make_subquotient(const FGModule& amb, const Matrix& num, const Matrix& den) {
    long p = amb.p;
    std::size_t g = amb.gens();
    if (num.rows() != g || den.rows() != g) fail("ShapeMismatch", "subquotient generator rows");
    Matrix rel = amb.relations();
    Matrix b = lattice_basis(num.hcat(rel), p);
    auto y = solve_in_span(b, den.hcat(rel), p);
    if (!y) fail("NotInSubmodule", "denominator not contained in numerator");
    auto snf = smith_normal_form(*y, p);
    std::size_t s = b.cols();
    std::vector<std::size_t> kept;
    FGModule mod{p, 0, {}};
    for (std::size_t i = snf.rank; i < s; ++i) {
        kept.push_back(i);
        ++mod.free_rank;
    }
    for (std::size_t i = snf.rank; i-- > 0;) {
        if (snf.diag[i] == 0) continue;
        kept.push_back(i);
        mod.torsion.push_back(snf.diag[i]);
    }
    Matrix c = b * snf.left_inv;
    Subquotient out;
    out.p = p;
    out.amb = amb;
    out.mod = std::move(mod);
    out.basis = std::move(b);
    out.ly = snf.left;
    out.kept = std::move(kept);
    out.lift = c.cols_subset(out.kept);
    return out;
}

Subquotient submodule(const FGModule& amb, const Matrix& num) {
    return make_subquotient(amb, num, Matrix(amb.gens(), 0));
}

Subquotient quotient_by(const FGModule& amb, const Matrix& den) {
    return make_subquotient(amb, Matrix::identity(amb.gens()), den);
}

Matrix kernel_numerator(const ModuleMap& f) {
    long p = f.dom.p;
    Matrix full = kernel_basis(f.mat.hcat(f.cod.relations()), p);
    std::vector<std::size_t> xrows(f.dom.gens());
    for (std::size_t i = 0; i < xrows.size(); ++i) xrows[i] = i;
    return full.rows_subset(xrows).hcat(f.dom.relations());
}

Subquotient kernel(const ModuleMap& f) { return submodule(f.dom, kernel_numerator(f)); }

Subquotient image(const ModuleMap& f) { return submodule(f.cod, f.mat); }

Subquotient cokernel(const ModuleMap& f) { return quotient_by(f.cod, f.mat); }

ModuleMap induced_map(const Subquotient& from, const Subquotient& to, const Matrix& ambient) {
    return ModuleMap::make(from.mod, to.mod, to.coords(ambient * from.lift));
}

bool is_exact(const ModuleMap& f, const ModuleMap& g) {
    if (!(f.cod == g.dom)) fail("ShapeMismatch", "exactness at mismatched module");
    if (!g.compose(f).is_zero_map()) return false;
    Matrix relb = f.cod.relations();
    return spans_equal(kernel_numerator(g), f.mat.hcat(relb), f.dom.p);
}

ModuleMap saturation(const ModuleMap& sub) {
    if (!sub.cod.is_torsion_free()) fail("CodomainHasTorsion", "saturation target has torsion");
    long p = sub.dom.p;
    auto snf = smith_normal_form(sub.mat, p);
    if (!sub.dom.is_torsion_free() || snf.rank != sub.dom.gens())
        fail("NotInjective", "saturation of a non-injective embedding");
    std::vector<std::size_t> idx(snf.rank);
    for (std::size_t i = 0; i < snf.rank; ++i) idx[i] = i;
    return ModuleMap::make(FGModule::free_module(p, snf.rank), sub.cod,
                           snf.left_inv.cols_subset(idx));
}

FMatrix mod_p_reduce(const ModuleMap& f) {
    long p = f.dom.p;
    FMatrix out(p, f.cod.gens(), f.dom.gens());
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j)
            out.at(i, j) = residue_mod_p(f.mat.at(i, j), p);
    return out;
}

} // namespace platt
