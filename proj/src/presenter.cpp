#include "platt/presenter.hpp"

#include "platt/errors.hpp"
#include "platt/generate.hpp"
#include "platt/gentle.hpp"

#include <string>
#include <utility>

namespace platt {

Realization realize_permutation(const Mackey& x) {
    mackey_validate(x);
    if (!x.torsion_free()) fail("NotHilbert90", "functor has torsion values");
    if (!predicates(x).hilbert90) fail("NotHilbert90", "functor is not Hilbert-90");

    auto f = gentle_is_projective(deflate(x));
    if (!f) fail("CertificationFailed", "deflation is not projective");
    // cross-check against the fixed-point rank system
    for (int j = 0; j <= x.n; ++j) {
        long expect = 0;
        for (int k = 0; k <= x.n; ++k)
            expect += (*f)[k] * static_cast<long>(pow_int(x.p, std::min(j, k)).convert_to<long long>());
        if (static_cast<long>(x.level[j].free_rank) != expect)
            fail("CertificationFailed", "rank system disagrees with the deflated head");
    }

    ProjectiveCover cx = projective_cover(x);
    if (cx.mult != *f)
        fail("CertificationFailed", "cover multiplicities disagree with the deflated head");
    Realization out;
    out.multiplicities = *f;
    out.omega = GLattice::permutation_lattice(x.p, x.n, *f);
    Mackey y = h0(out.omega);
    ProjectiveCover cy = projective_cover(y);
    if (cy.mult != *f)
        fail("CertificationFailed", "permutation model has a different head");

    out.phi = Nat{std::move(y), x, {}};
    for (int k = 0; k <= x.n; ++k) {
        const Matrix& a = cx.eps.comp[k].mat;
        const Matrix& b = cy.eps.comp[k].mat;
        if (!a.is_unimodular(x.p) || !b.is_unimodular(x.p))
            fail("CertificationFailed", "projective cover component not invertible");
        out.phi.comp.push_back(
            ModuleMap::make(out.phi.src.level[k], x.level[k], a * b.inverse()));
    }
    nat_validate(out.phi);
    if (!split_injectivity_check(out.phi) || !surjectivity_check(out.phi))
        fail("CertificationFailed", "realization map failed certification");
    return out;
}

namespace {

long orbit_total(long p, const std::vector<long>& f) {
    long total = 0, orbit = 1;
    for (std::size_t k = 0; k < f.size(); ++k) {
        total += f[k] * orbit;
        orbit *= p;
    }
    return total;
}

} // namespace

void presentation_verify(const PermPresentation& pres, const GLattice& m) {
    GLattice omega0 = GLattice::permutation_lattice(pres.p, pres.n, pres.omega0);
    GLattice omega1 = GLattice::permutation_lattice(pres.p, pres.n, pres.omega1);
    if (pres.project.rows() != m.rank || pres.project.cols() != omega0.rank ||
        pres.inject.rows() != omega0.rank || pres.inject.cols() != omega1.rank)
        fail("ShapeMismatch", "presentation matrices do not match the orbit counts");
    if (!pres.project.all_integral(pres.p) || !pres.inject.all_integral(pres.p))
        fail("IllDefined", "presentation matrices must be over R");
    if (!(pres.project * omega0.action == m.action * pres.project))
        fail("IllDefined", "projection is not equivariant");
    if (!(pres.inject * omega1.action == omega0.action * pres.inject))
        fail("IllDefined", "injection is not equivariant");
    if (kernel_basis(pres.inject, pres.p).cols() != 0)
        fail("NotExact", "injection has a kernel");
    auto free_of = [&](std::size_t r) { return FGModule::free_module(pres.p, r); };
    ModuleMap inj = ModuleMap::make(free_of(omega1.rank), free_of(omega0.rank), pres.inject);
    ModuleMap prj = ModuleMap::make(free_of(omega0.rank), free_of(m.rank), pres.project);
    if (!cokernel(inj).mod.is_torsion_free())
        fail("NotExact", "cokernel of the injection has torsion");
    if (!cokernel(prj).mod.is_zero()) fail("NotExact", "projection is not surjective");
    if (!is_exact(inj, prj)) fail("NotExact", "sequence not exact in the middle");
    if (orbit_total(pres.p, pres.omega0) - orbit_total(pres.p, pres.omega1) !=
        static_cast<long>(m.rank))
        fail("NotExact", "rank balance violated");
}

PermPresentation present_lattice(const GLattice& m) {
    Mackey x = h0(m);
    ProjectiveCover pc = projective_cover(x);
    auto [kfun, incl] = nat_kernel(pc.eps);
    if (!predicates(kfun).hilbert90)
        inconsistent("kernel of a fixed-point cover must be Hilbert-90");

    PermPresentation pres;
    pres.p = m.p;
    pres.n = m.n;
    pres.omega0 = pc.mult;
    Matrix level_n_basis = fixed_points(m, m.n).mat;
    pres.project = level_n_basis * pc.eps.comp[m.n].mat;
    if (kfun.is_zero()) {
        pres.omega1.assign(m.n + 1, 0);
        pres.inject = Matrix(pc.proj.level[m.n].gens(), 0);
    } else {
        Realization realized = realize_permutation(kfun);
        pres.omega1 = realized.multiplicities;
        Matrix src_basis = fixed_points(realized.omega, m.n).mat;
        pres.inject =
            incl.comp[m.n].mat * realized.phi.comp[m.n].mat * src_basis.inverse();
    }
    presentation_verify(pres, m);
    return pres;
}

GldimReport gldim_witness(long p, int n) {
    GldimReport report;
    report.p = p;
    report.n = n;
    MackeyResolution br = mackey_resolution(standard_B(p, n));
    report.b_length = br.length();
    if (report.b_length != 3)
        fail("WitnessFailed", "B resolved in length " + std::to_string(report.b_length));
    report.ext3 = ext_B(standard_T(p, n), 3);
    FGModule expected{p, 0, {n}};
    if (!(report.ext3 == expected))
        fail("WitnessFailed", "Ext^3(B, T) is not R/p^n");

    std::mt19937_64 rng(900 + 10 * static_cast<std::uint64_t>(p) + n);
    std::vector<Mackey> sample;
    for (int trial = 0; trial < 6; ++trial) {
        GLattice m = random_lattice(p, n, 8, rng);
        sample.push_back(h0(m));
        sample.push_back(h_0(m));
    }
    for (int k = 0; k <= n; ++k) {
        sample.push_back(standard_P(p, n, k));
        sample.push_back(standard_J(p, n, k));
    }
    for (const Mackey& x : sample) {
        Predicates pr = predicates(x);
        int len = mackey_resolution(x).length();
        if (pr.i_injective) {
            report.max_i_injective_length = std::max(report.max_i_injective_length, len);
            if (len > 2) fail("WitnessFailed", "i-injective functor of length > 2");
        }
    }
    for (int trial = 0; trial < 8; ++trial) {
        GLattice m = random_lattice(p, n, 8, rng);
        int len = mackey_resolution(h0(m)).length();
        report.max_h0_length = std::max(report.max_h0_length, len);
        if (len > 1) fail("WitnessFailed", "fixed-point functor of length > 1");
    }
    return report;
}

} // namespace platt
