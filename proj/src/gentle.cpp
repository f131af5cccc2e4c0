#include "platt/gentle.hpp"

#include "platt/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace platt {

namespace {

ModuleMap free_map(long p, Matrix m) {
    return ModuleMap::make(FGModule::free_module(p, m.cols()), FGModule::free_module(p, m.rows()),
                           std::move(m));
}

Matrix scalar1(const Scalar& v) {
    Matrix m(1, 1);
    m.at(0, 0) = v;
    return m;
}

} // namespace

bool GentleFunctor::torsion_free() const {
    for (const auto& v : vertex)
        if (!v.is_torsion_free()) return false;
    return true;
}

bool GentleFunctor::is_zero() const {
    for (const auto& v : vertex)
        if (!v.is_zero()) return false;
    return true;
}

void gentle_validate(const GentleFunctor& f) {
    if (f.vertex.size() != static_cast<std::size_t>(f.n + 1) ||
        f.down.size() != static_cast<std::size_t>(f.n) ||
        f.up.size() != static_cast<std::size_t>(f.n))
        fail("RelationViolation", "wrong number of vertices or maps");
    for (int k = 0; k < f.n; ++k) {
        if (!(f.down[k].compose(f.up[k]) ==
              ModuleMap::identity(f.vertex[k]).scaled(Scalar(f.p))))
            fail("RelationViolation", "down∘up != p at edge " + std::to_string(k));
        if (!(f.up[k].compose(f.down[k]) ==
              ModuleMap::identity(f.vertex[k + 1]).scaled(Scalar(f.p))))
            fail("RelationViolation", "up∘down != p at edge " + std::to_string(k));
    }
}

GentleFunctor gentle_zero(long p, int n) {
    GentleFunctor f{p, n, {}, {}, {}};
    FGModule z = FGModule::zero(p);
    for (int k = 0; k <= n; ++k) f.vertex.push_back(z);
    for (int k = 0; k < n; ++k) {
        f.down.push_back(ModuleMap::zero(z, z));
        f.up.push_back(ModuleMap::zero(z, z));
    }
    return f;
}

GentleFunctor gentle_direct_sum(const GentleFunctor& a, const GentleFunctor& b) {
    if (a.p != b.p || a.n != b.n) fail("ShapeMismatch", "direct sum of mismatched functors");
    GentleFunctor out{a.p, a.n, {}, {}, {}};
    for (int k = 0; k <= a.n; ++k)
        out.vertex.push_back(FGModule::direct_sum(a.vertex[k], b.vertex[k]));
    for (int k = 0; k < a.n; ++k) {
        out.down.push_back(ModuleMap::direct_sum(a.down[k], b.down[k]));
        out.up.push_back(ModuleMap::direct_sum(a.up[k], b.up[k]));
    }
    return out;
}

GentleFunctor gentle_dual(const GentleFunctor& f) {
    if (!f.torsion_free()) fail("HasTorsion", "dual of a torsion-valued functor");
    GentleFunctor out{f.p, f.n, f.vertex, {}, {}};
    for (int k = 0; k < f.n; ++k) {
        out.down.push_back(
            ModuleMap::make(f.vertex[k + 1], f.vertex[k], f.up[k].mat.transpose()));
        out.up.push_back(
            ModuleMap::make(f.vertex[k], f.vertex[k + 1], f.down[k].mat.transpose()));
    }
    return out;
}

GentleFunctor gentle_P(long p, int n, int l) {
    if (l < 0 || l > n) fail("BadIndex", "P index out of range");
    ArrowDiagram d;
    for (int k = 0; k < n; ++k) d.down_iso.push_back(k < l);
    return functor_of(p, d);
}

GentleFunctor gentle_J(long p, int n, int l) {
    if (l < 0 || l > n) fail("BadIndex", "J index out of range");
    ArrowDiagram d;
    for (int k = 0; k < n; ++k) d.down_iso.push_back(k >= l);
    return functor_of(p, d);
}

std::size_t gentle_rank(const GentleFunctor& f) {
    std::size_t r = 0;
    bool first = true;
    for (const auto& v : f.vertex) {
        if (!v.is_torsion_free()) fail("RankMismatch", "vertex has torsion");
        if (first) {
            r = v.free_rank;
            first = false;
        } else if (v.free_rank != r) {
            fail("RankMismatch", "vertices have different ranks");
        }
    }
    return r;
}

std::string ArrowDiagram::str() const {
    std::string s;
    for (bool d : down_iso) s += d ? '<' : '>';
    return s;
}

ArrowDiagram ArrowDiagram::parse(const std::string& s) {
    ArrowDiagram d;
    for (char c : s) {
        if (c != '<' && c != '>') fail("BadDiagram", "diagram characters must be < or >");
        d.down_iso.push_back(c == '<');
    }
    return d;
}

ArrowDiagram diagram_of(const GentleFunctor& f) {
    if (gentle_rank(f) != 1) fail("NotRankOne", "diagram of a functor of rank != 1");
    ArrowDiagram d;
    for (int k = 0; k < f.n; ++k) {
        bool down_unit = is_unit(f.down[k].mat.at(0, 0), f.p);
        bool up_unit = is_unit(f.up[k].mat.at(0, 0), f.p);
        if (!down_unit && !up_unit)
            fail("AmbiguousEdge", "neither map invertible at edge " + std::to_string(k));
        d.down_iso.push_back(down_unit);
    }
    return d;
}

GentleFunctor functor_of(long p, const ArrowDiagram& d) {
    GentleFunctor f{p, d.n(), {}, {}, {}};
    FGModule r = FGModule::free_module(p, 1);
    for (int k = 0; k <= d.n(); ++k) f.vertex.push_back(r);
    for (int k = 0; k < d.n(); ++k) {
        Scalar dn = d.down_iso[k] ? 1 : p;
        Scalar uu = d.down_iso[k] ? p : 1;
        f.down.push_back(ModuleMap::identity(r).scaled(dn));
        f.up.push_back(ModuleMap::identity(r).scaled(uu));
    }
    return f;
}

std::pair<std::vector<int>, std::vector<int>> max_min(const ArrowDiagram& d) {
    std::vector<int> maxs, mins;
    int n = d.n();
    if (n == 0) return {{0}, {}};
    if (!d.down_iso[0]) maxs.push_back(0);
    for (int v = 1; v < n; ++v) {
        if (d.down_iso[v - 1] && !d.down_iso[v]) maxs.push_back(v);
        if (!d.down_iso[v - 1] && d.down_iso[v]) mins.push_back(v);
    }
    if (d.down_iso[n - 1]) maxs.push_back(n);
    return {maxs, mins};
}

WedgeResult wedge(const ArrowDiagram& d) {
    auto [maxs, mins] = max_min(d);
    if (mins.empty()) fail("IsProjective", "wedge of a projective diagram");
    WedgeResult w;
    w.s = maxs.front();
    w.t = mins.front();
    w.diagram = d;
    for (int k = 0; k < w.t; ++k) w.diagram.down_iso[k] = true;
    return w;
}

void gentle_nat_validate(const GentleNat& phi) {
    const GentleFunctor& s = phi.src;
    const GentleFunctor& t = phi.tgt;
    if (s.p != t.p || s.n != t.n || phi.comp.size() != s.vertex.size())
        fail("NotNatural", "component count mismatch");
    for (int k = 0; k < s.n; ++k) {
        if (!(phi.comp[k].compose(s.down[k]) == t.down[k].compose(phi.comp[k + 1])))
            fail("NotNatural", "down square at edge " + std::to_string(k));
        if (!(phi.comp[k + 1].compose(s.up[k]) == t.up[k].compose(phi.comp[k])))
            fail("NotNatural", "up square at edge " + std::to_string(k));
    }
}

GentleNat gentle_nat_compose(const GentleNat& outer, const GentleNat& inner) {
    GentleNat out{inner.src, outer.tgt, {}};
    for (std::size_t k = 0; k < inner.comp.size(); ++k)
        out.comp.push_back(outer.comp[k].compose(inner.comp[k]));
    return out;
}

GentleNat gentle_nat_from_element(const GentleFunctor& f, int l, const Matrix& elt) {
    if (l < 0 || l > f.n) fail("BadIndex", "classifying vertex out of range");
    if (elt.rows() != f.vertex[l].gens()) fail("ShapeMismatch", "element coordinate length");
    std::size_t copies = elt.cols();
    GentleFunctor src = gentle_zero(f.p, f.n);
    if (copies) {
        src = gentle_P(f.p, f.n, l);
        for (std::size_t c = 1; c < copies; ++c)
            src = gentle_direct_sum(src, gentle_P(f.p, f.n, l));
    }
    std::vector<Matrix> comp(f.n + 1);
    comp[l] = elt;
    for (int k = l; k-- > 0;) comp[k] = f.down[k].mat * comp[k + 1];
    for (int k = l; k < f.n; ++k) comp[k + 1] = f.up[k].mat * comp[k];
    GentleNat out{std::move(src), f, {}};
    for (int k = 0; k <= f.n; ++k) {
        if (!copies) comp[k] = Matrix(f.vertex[k].gens(), 0);
        out.comp.push_back(ModuleMap::make(out.src.vertex[k], f.vertex[k], std::move(comp[k])));
    }
    return out;
}

namespace {

/// Isomorphism functor_of(diagram_of(f)) -> f choosing unit generators
/// edge by edge from vertex 0.
GentleNat normalization_iso(const GentleFunctor& f, const ArrowDiagram& d) {
    GentleNat out{functor_of(f.p, d), f, {}};
    Scalar g = 1;
    out.comp.push_back(ModuleMap::make(out.src.vertex[0], f.vertex[0], scalar1(g)));
    for (int k = 0; k < f.n; ++k) {
        if (d.down_iso[k])
            g = g / f.down[k].mat.at(0, 0);
        else
            g = g * f.up[k].mat.at(0, 0);
        out.comp.push_back(ModuleMap::make(out.src.vertex[k + 1], f.vertex[k + 1], scalar1(g)));
    }
    return out;
}

void verify_resolution(const GentleResolution& r, const GentleFunctor& f) {
    gentle_nat_validate(r.alpha);
    gentle_nat_validate(r.beta);
    for (int v = 0; v <= f.n; ++v) {
        if (!kernel(r.alpha.comp[v]).mod.is_zero())
            inconsistent("resolution differential not injective");
        if (!cokernel(r.beta.comp[v]).mod.is_zero())
            inconsistent("resolution augmentation not surjective");
        if (!is_exact(r.alpha.comp[v], r.beta.comp[v]))
            inconsistent("resolution not exact in the middle");
    }
    if (!gentle_is_projective(r.q0) || !gentle_is_projective(r.q1))
        inconsistent("resolution terms not projective");
}

} // namespace

RankOneSES rank1_ses(const GentleFunctor& f) {
    ArrowDiagram d = diagram_of(f);
    auto w = wedge(d);
    long p = f.p;
    int n = f.n, s = w.s, t = w.t;
    // generator valuations of the two canonical subobjects
    std::vector<int> a(n + 1, 0), b(n + 1, 0);
    for (int k = t + 1; k <= n; ++k) a[k] = a[k - 1] + (d.down_iso[k - 1] ? 1 : 0);
    for (int k = t; k-- > 0;) b[k] = b[k + 1] + (d.down_iso[k] ? 0 : 1);
    RankOneSES out;
    out.s = s;
    out.t = t;
    out.sub = gentle_P(p, n, t);
    out.middle = gentle_direct_sum(gentle_P(p, n, s), functor_of(p, w.diagram));
    out.psi = GentleNat{out.sub, out.middle, {}};
    out.phi = GentleNat{out.middle, f, {}};
    for (int k = 0; k <= n; ++k) {
        int wv = std::max(a[k], b[k]);
        Matrix psi(2, 1);
        psi.at(0, 0) = Scalar(pow_int(p, wv - a[k]));
        psi.at(1, 0) = -Scalar(pow_int(p, wv - b[k]));
        out.psi.comp.push_back(ModuleMap::make(out.sub.vertex[k], out.middle.vertex[k], psi));
        Matrix phi(1, 2);
        phi.at(0, 0) = Scalar(pow_int(p, a[k]));
        phi.at(0, 1) = Scalar(pow_int(p, b[k]));
        out.phi.comp.push_back(ModuleMap::make(out.middle.vertex[k], f.vertex[k], phi));
    }
    gentle_nat_validate(out.psi);
    gentle_nat_validate(out.phi);
    for (int k = 0; k <= n; ++k) {
        if (!kernel(out.psi.comp[k]).mod.is_zero() ||
            !cokernel(out.phi.comp[k]).mod.is_zero() ||
            !is_exact(out.psi.comp[k], out.phi.comp[k]))
            inconsistent("wedge sequence not exact");
    }
    return out;
}

GentleResolution rank1_resolution(const GentleFunctor& f) {
    ArrowDiagram d = diagram_of(f);
    GentleNat norm = normalization_iso(f, d);
    auto [maxs, mins] = max_min(d);
    GentleResolution r;
    if (mins.empty()) {
        r.q0 = gentle_P(f.p, f.n, maxs[0]);
        r.q0_levels = {maxs[0]};
        r.q1 = gentle_zero(f.p, f.n);
        r.beta = norm;
        r.alpha = GentleNat{r.q1, r.q0, {}};
        for (int k = 0; k <= f.n; ++k)
            r.alpha.comp.push_back(ModuleMap::zero(r.q1.vertex[k], r.q0.vertex[k]));
        verify_resolution(r, f);
        return r;
    }
    GentleFunctor nf = norm.src;
    auto ses = rank1_ses(nf);
    // recurse on the wedge (one fewer minimum)
    GentleFunctor wedge_part{f.p, f.n, {}, {}, {}};
    {
        ArrowDiagram wd = wedge(d).diagram;
        wedge_part = functor_of(f.p, wd);
    }
    GentleResolution inner = rank1_resolution(wedge_part);

    r.q0 = gentle_direct_sum(gentle_P(f.p, f.n, ses.s), inner.q0);
    r.q0_levels = {ses.s};
    r.q0_levels.insert(r.q0_levels.end(), inner.q0_levels.begin(), inner.q0_levels.end());
    r.q1 = gentle_direct_sum(gentle_P(f.p, f.n, ses.t), inner.q1);
    r.q1_levels = {ses.t};
    r.q1_levels.insert(r.q1_levels.end(), inner.q1_levels.begin(), inner.q1_levels.end());

    // beta = phi ∘ (id_{P^s} ⊕ inner.beta), then the normalization into f
    r.beta = GentleNat{r.q0, f, {}};
    for (int k = 0; k <= f.n; ++k) {
        Scalar gs = ses.phi.comp[k].mat.at(0, 0), ga = ses.phi.comp[k].mat.at(0, 1);
        Matrix m = scalar1(gs).hcat(inner.beta.comp[k].mat.scaled(ga));
        m = norm.comp[k].mat * m;
        r.beta.comp.push_back(ModuleMap::make(r.q0.vertex[k], f.vertex[k], std::move(m)));
    }

    // alpha: on P^t the S-coordinate of psi plus a lift of the A-coordinate
    // through inner.beta; on inner.q1 the inner differential
    GentleNat into_s =
        gentle_nat_from_element(gentle_P(f.p, f.n, ses.s), ses.t,
                                scalar1(ses.psi.comp[ses.t].mat.at(0, 0)));
    auto lifted = solve_in_span(inner.beta.comp[ses.t].mat,
                                scalar1(ses.psi.comp[ses.t].mat.at(1, 0)), f.p);
    if (!lifted) inconsistent("wedge map does not lift through the inner cover");
    GentleNat into_inner = gentle_nat_from_element(inner.q0, ses.t, *lifted);
    r.alpha = GentleNat{r.q1, r.q0, {}};
    for (int k = 0; k <= f.n; ++k) {
        Matrix left = into_s.comp[k].mat.vcat(into_inner.comp[k].mat);
        Matrix right = Matrix(1, inner.q1.vertex[k].gens()).vcat(inner.alpha.comp[k].mat);
        r.alpha.comp.push_back(
            ModuleMap::make(r.q1.vertex[k], r.q0.vertex[k], left.hcat(right)));
    }
    verify_resolution(r, f);
    return r;
}

RankOneSub saturated_rank1_sub(const GentleFunctor& f) {
    std::size_t rank = gentle_rank(f);
    if (!rank) fail("ZeroRank", "no rank-1 subfunctor of the zero functor");
    std::vector<Matrix> w(f.n + 1);
    w[0] = Matrix(f.vertex[0].gens(), 1);
    w[0].at(0, 0) = 1;
    for (int k = 0; k < f.n; ++k) w[k + 1] = f.up[k].mat * w[k];
    std::vector<int> content(f.n + 1, 0);
    std::vector<Matrix> v(f.n + 1);
    for (int k = 0; k <= f.n; ++k) {
        int m = kInfVal;
        for (std::size_t i = 0; i < w[k].rows(); ++i)
            m = std::min(m, valuation(w[k].at(i, 0), f.p));
        if (m == kInfVal) inconsistent("up composite of a basis vector vanished");
        content[k] = m;
        v[k] = w[k].scaled(Scalar(1) / Scalar(pow_int(f.p, m)));
    }
    RankOneSub out;
    out.sub = GentleFunctor{f.p, f.n, {}, {}, {}};
    FGModule r = FGModule::free_module(f.p, 1);
    for (int k = 0; k <= f.n; ++k) out.sub.vertex.push_back(r);
    for (int k = 0; k < f.n; ++k) {
        out.sub.up.push_back(
            ModuleMap::identity(r).scaled(Scalar(pow_int(f.p, content[k + 1] - content[k]))));
        out.sub.down.push_back(
            ModuleMap::identity(r).scaled(Scalar(pow_int(f.p, 1 + content[k] - content[k + 1]))));
    }
    gentle_validate(out.sub);
    out.incl = GentleNat{out.sub, f, {}};
    for (int k = 0; k <= f.n; ++k)
        out.incl.comp.push_back(ModuleMap::make(r, f.vertex[k], v[k]));
    gentle_nat_validate(out.incl);
    return out;
}

GentleResolution gentle_resolution(const GentleFunctor& f) {
    std::size_t rank = gentle_rank(f);
    if (rank == 0) {
        GentleResolution r;
        r.q0 = gentle_zero(f.p, f.n);
        r.q1 = gentle_zero(f.p, f.n);
        r.alpha = GentleNat{r.q1, r.q0, {}};
        r.beta = GentleNat{r.q0, f, {}};
        for (int k = 0; k <= f.n; ++k) {
            r.alpha.comp.push_back(ModuleMap::zero(r.q1.vertex[k], r.q0.vertex[k]));
            r.beta.comp.push_back(ModuleMap::zero(r.q0.vertex[k], f.vertex[k]));
        }
        return r;
    }
    if (rank == 1) return rank1_resolution(f);

    auto sub = saturated_rank1_sub(f);
    // quotient functor and its projection
    std::vector<Subquotient> co;
    for (int k = 0; k <= f.n; ++k) co.push_back(cokernel(sub.incl.comp[k]));
    GentleFunctor quo{f.p, f.n, {}, {}, {}};
    for (int k = 0; k <= f.n; ++k) quo.vertex.push_back(co[k].mod);
    for (int k = 0; k < f.n; ++k) {
        quo.down.push_back(induced_map(co[k + 1], co[k], f.down[k].mat));
        quo.up.push_back(induced_map(co[k], co[k + 1], f.up[k].mat));
    }
    gentle_validate(quo);

    GentleResolution rs = rank1_resolution(sub.sub);
    GentleResolution rq = gentle_resolution(quo);

    GentleResolution r;
    r.q0 = gentle_direct_sum(rs.q0, rq.q0);
    r.q0_levels = rs.q0_levels;
    r.q0_levels.insert(r.q0_levels.end(), rq.q0_levels.begin(), rq.q0_levels.end());
    r.q1 = gentle_direct_sum(rs.q1, rq.q1);
    r.q1_levels = rs.q1_levels;
    r.q1_levels.insert(r.q1_levels.end(), rq.q1_levels.begin(), rq.q1_levels.end());

    // beta: the sub part factors through the inclusion; each projective
    // summand over the quotient lifts through the projection
    GentleNat beta_s = gentle_nat_compose(sub.incl, rs.beta);
    std::vector<GentleNat> qlifts;
    for (std::size_t i = 0; i < rq.q0_levels.size(); ++i) {
        int l = rq.q0_levels[i];
        Matrix cls = rq.beta.comp[l].mat.col(i);
        auto y = solve_in_span(co[l].projection().mat, cls, f.p);
        if (!y) inconsistent("cover of the quotient does not lift");
        qlifts.push_back(gentle_nat_from_element(f, l, *y));
    }
    r.beta = GentleNat{r.q0, f, {}};
    for (int k = 0; k <= f.n; ++k) {
        Matrix m = beta_s.comp[k].mat;
        for (auto& piece : qlifts) m = m.hcat(piece.comp[k].mat);
        r.beta.comp.push_back(ModuleMap::make(r.q0.vertex[k], f.vertex[k], std::move(m)));
    }

    // alpha: block triangular with a horseshoe correction h making
    // beta ∘ alpha vanish on the quotient column block
    std::vector<Matrix> sigma(f.n + 1); // (beta-lift of q0-quotient part) ∘ alpha_q
    for (int k = 0; k <= f.n; ++k) {
        Matrix qpart(f.vertex[k].gens(), 0);
        for (auto& piece : qlifts) qpart = qpart.hcat(piece.comp[k].mat);
        sigma[k] = qpart * rq.alpha.comp[k].mat;
    }
    std::vector<GentleNat> hpieces;
    for (std::size_t j = 0; j < rq.q1_levels.size(); ++j) {
        int l = rq.q1_levels[j];
        auto in_sub = solve_in_span(sub.incl.comp[l].mat, sigma[l].col(j), f.p);
        if (!in_sub) inconsistent("horseshoe correction does not land in the subfunctor");
        auto lifted = solve_in_span(rs.beta.comp[l].mat, in_sub->scaled(Scalar(-1)), f.p);
        if (!lifted) inconsistent("horseshoe correction does not lift");
        hpieces.push_back(gentle_nat_from_element(rs.q0, l, *lifted));
    }
    r.alpha = GentleNat{r.q1, r.q0, {}};
    for (int k = 0; k <= f.n; ++k) {
        std::size_t s0 = rs.q0.vertex[k].gens();
        Matrix h(s0, 0);
        for (auto& piece : hpieces) h = h.hcat(piece.comp[k].mat);
        if (rq.q1_levels.empty()) h = Matrix(s0, rq.q1.vertex[k].gens());
        Matrix top = rs.alpha.comp[k].mat.hcat(h);
        Matrix bottom =
            Matrix(rq.q0.vertex[k].gens(), rs.q1.vertex[k].gens()).hcat(rq.alpha.comp[k].mat);
        r.alpha.comp.push_back(
            ModuleMap::make(r.q1.vertex[k], r.q0.vertex[k], top.vcat(bottom)));
    }
    verify_resolution(r, f);
    return r;
}

std::vector<long> gentle_head(const GentleFunctor& f) {
    std::vector<long> h;
    for (int k = 0; k <= f.n; ++k) {
        std::size_t g = f.vertex[k].gens();
        Matrix den = Matrix::identity(g).scaled(Scalar(f.p));
        if (k < f.n) den = den.hcat(f.down[k].mat);
        if (k > 0) den = den.hcat(f.up[k - 1].mat);
        h.push_back(static_cast<long>(quotient_by(f.vertex[k], den).mod.gens()));
    }
    return h;
}

std::optional<std::vector<long>> gentle_is_projective(const GentleFunctor& f) {
    if (!f.torsion_free()) return std::nullopt;
    std::size_t rank;
    try {
        rank = gentle_rank(f);
    } catch (const Error&) {
        return std::nullopt;
    }
    auto h = gentle_head(f);
    long total = 0;
    for (long v : h) total += v;
    if (static_cast<std::size_t>(total) != rank) return std::nullopt;
    return h;
}

GentleFunctor deflate(const Mackey& x) {
    std::vector<Subquotient> co;
    for (int k = 0; k <= x.n; ++k) {
        Matrix aug = x.gamma[k].mat - Matrix::identity(x.level[k].gens());
        co.push_back(quotient_by(x.level[k], aug));
    }
    GentleFunctor f{x.p, x.n, {}, {}, {}};
    for (int k = 0; k <= x.n; ++k) f.vertex.push_back(co[k].mod);
    for (int k = 0; k < x.n; ++k) {
        f.down.push_back(induced_map(co[k + 1], co[k], x.tr[k].mat));
        f.up.push_back(induced_map(co[k], co[k + 1], x.res[k].mat));
    }
    gentle_validate(f);
    return f;
}

Mackey inflate(const GentleFunctor& f) {
    Mackey x{f.p, f.n, f.vertex, f.up, f.down, {}};
    for (int k = 0; k <= f.n; ++k) x.gamma.push_back(ModuleMap::identity(f.vertex[k]));
    mackey_validate(x);
    return x;
}

GentleNat deflate_nat(const Nat& phi) {
    GentleFunctor s = deflate(phi.src), t = deflate(phi.tgt);
    GentleNat out{s, t, {}};
    for (int k = 0; k <= phi.src.n; ++k) {
        Matrix aug_s = phi.src.gamma[k].mat - Matrix::identity(phi.src.level[k].gens());
        Matrix aug_t = phi.tgt.gamma[k].mat - Matrix::identity(phi.tgt.level[k].gens());
        auto cs = quotient_by(phi.src.level[k], aug_s);
        auto ct = quotient_by(phi.tgt.level[k], aug_t);
        out.comp.push_back(induced_map(cs, ct, phi.comp[k].mat));
    }
    return out;
}

} // namespace platt
