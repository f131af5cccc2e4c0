#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "platt/errors.hpp"
#include "platt/gentle.hpp"
#include "platt/mackey.hpp"

#include <random>

using namespace platt;

namespace {

Matrix random_unimodular(long p, std::size_t r, std::mt19937_64& rng) {
    Matrix m = Matrix::identity(r);
    if (r < 2) return m;
    std::uniform_int_distribution<std::size_t> pick(0, r - 1);
    std::uniform_int_distribution<long> coef(-p * p, p * p);
    for (int step = 0; step < 24; ++step) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Matrix e = Matrix::identity(r);
        e.at(i, j) = coef(rng);
        m = m * e;
    }
    return m;
}

/// Random lattice functor: per edge down = A diag(p^eps) B so that
/// up = B^-1 diag(p^(1-eps)) A^-1 stays integral.
GentleFunctor random_gentle(long p, int n, std::size_t r, std::mt19937_64& rng) {
    GentleFunctor f{p, n, {}, {}, {}};
    FGModule free = FGModule::free_module(p, r);
    for (int k = 0; k <= n; ++k) f.vertex.push_back(free);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int k = 0; k < n; ++k) {
        Matrix a = random_unimodular(p, r, rng);
        Matrix b = random_unimodular(p, r, rng);
        Matrix d0(r, r), u0(r, r);
        for (std::size_t i = 0; i < r; ++i) {
            int e = bit(rng);
            d0.at(i, i) = Scalar(pow_int(p, e));
            u0.at(i, i) = Scalar(pow_int(p, 1 - e));
        }
        f.down.push_back(ModuleMap::make(free, free, a * d0 * b));
        f.up.push_back(ModuleMap::make(free, free, b.inverse() * u0 * a.inverse()));
    }
    gentle_validate(f);
    return f;
}

ArrowDiagram random_diagram(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> bit(0, 1);
    ArrowDiagram d;
    for (int k = 0; k < n; ++k) d.down_iso.push_back(bit(rng) == 1);
    return d;
}

} // namespace

TEST_CASE("validation and basic constructors") {
    for (long p : {2L, 3L}) {
        for (int n = 0; n <= 3; ++n) {
            for (int l = 0; l <= n; ++l) {
                GentleFunctor f = gentle_P(p, n, l);
                gentle_validate(f);
                CHECK(gentle_rank(f) == 1);
                GentleFunctor j = gentle_J(p, n, l);
                gentle_validate(j);
            }
        }
    }
    GentleFunctor bad = gentle_P(3, 2, 1);
    bad.up[0] = bad.up[0].scaled(Scalar(3));
    CHECK_THROWS_WITH_AS(gentle_validate(bad), doctest::Contains("edge 0"), Error);
}

TEST_CASE("diagram round trips") {
    CHECK(ArrowDiagram::parse("<>><>>><").str() == "<>><>>><");
    CHECK_THROWS_AS(ArrowDiagram::parse("<x"), Error);
    std::mt19937_64 rng(11);
    for (long p : {2L, 5L}) {
        for (int n = 0; n <= 8; ++n) {
            for (int trial = 0; trial < 6; ++trial) {
                ArrowDiagram d = random_diagram(n, rng);
                CHECK(diagram_of(functor_of(p, d)) == d);
            }
        }
    }
    CHECK_THROWS_AS(diagram_of(random_gentle(2, 2, 2, rng)), Error);
}

TEST_CASE("maxima, minima, wedge") {
    auto d = ArrowDiagram::parse("<>><>>><");
    auto [maxs, mins] = max_min(d);
    CHECK(maxs == std::vector<int>{1, 4, 8});
    CHECK(mins == std::vector<int>{3, 7});
    auto w = wedge(d);
    CHECK(w.s == 1);
    CHECK(w.t == 3);
    CHECK(w.diagram.str() == "<<<<>>><");

    CHECK(max_min(ArrowDiagram::parse("<<<")).first == std::vector<int>{3});
    CHECK(max_min(ArrowDiagram::parse(">>")).first == std::vector<int>{0});
    CHECK(max_min(ArrowDiagram{}).first == std::vector<int>{0});
    CHECK(max_min(ArrowDiagram{}).second.empty());
    CHECK_THROWS_AS(wedge(ArrowDiagram::parse("<<")), Error);
}

TEST_CASE("classified natural maps") {
    std::mt19937_64 rng(5);
    for (long p : {2L, 3L}) {
        GentleFunctor f = random_gentle(p, 3, 3, rng);
        for (int l = 0; l <= 3; ++l) {
            Matrix elt(3, 2);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 2; ++j) elt.at(i, j) = Scalar((long)(i + 2 * j) - 1);
            GentleNat phi = gentle_nat_from_element(f, l, elt);
            gentle_nat_validate(phi);
            CHECK(phi.comp[l].mat == elt);
            CHECK(gentle_rank(phi.src) == 2);
        }
    }
}

TEST_CASE("wedge short exact sequence") {
    for (long p : {2L, 3L}) {
        GentleFunctor f = functor_of(p, ArrowDiagram::parse("<>><>>><"));
        RankOneSES ses = rank1_ses(f);
        CHECK(ses.s == 1);
        CHECK(ses.t == 3);
        CHECK(diagram_of(ses.sub) == diagram_of(gentle_P(p, 8, 3)));
        CHECK(gentle_rank(ses.middle) == 2);
        // exactness is checked internally; spot-check the composite too
        for (int k = 0; k <= 8; ++k)
            CHECK(ses.phi.comp[k].compose(ses.psi.comp[k]).mat.is_zero());
    }
}

TEST_CASE("rank one resolutions across all diagrams") {
    for (long p : {2L, 3L}) {
        for (int n = 0; n <= 6; ++n) {
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                ArrowDiagram d;
                for (int k = 0; k < n; ++k) d.down_iso.push_back((mask >> k) & 1);
                GentleResolution r = rank1_resolution(functor_of(p, d));
                auto [maxs, mins] = max_min(d);
                CHECK(r.q0_levels == maxs);
                CHECK(r.q1_levels == mins);
            }
        }
    }
}

TEST_CASE("heads and projectivity") {
    long p = 3;
    auto d = ArrowDiagram::parse("<>><>>><");
    GentleFunctor f = functor_of(p, d);
    auto h = gentle_head(f);
    std::vector<long> expect(9, 0);
    for (int v : {1, 4, 8}) expect[v] = 1;
    CHECK(h == expect);
    CHECK_FALSE(gentle_is_projective(f).has_value());

    GentleFunctor q = gentle_direct_sum(gentle_P(p, 3, 0),
                                        gentle_direct_sum(gentle_P(p, 3, 2), gentle_P(p, 3, 2)));
    auto hq = gentle_is_projective(q);
    REQUIRE(hq.has_value());
    CHECK(*hq == std::vector<long>{1, 0, 2, 0});
}

TEST_CASE("saturated rank one subfunctors") {
    std::mt19937_64 rng(29);
    for (long p : {2L, 3L}) {
        for (int trial = 0; trial < 20; ++trial) {
            GentleFunctor f = random_gentle(p, 3, 3, rng);
            RankOneSub s = saturated_rank1_sub(f);
            gentle_validate(s.sub);
            gentle_nat_validate(s.incl);
            for (int k = 0; k <= 3; ++k)
                CHECK(cokernel(s.incl.comp[k]).mod.is_torsion_free());
        }
    }
}

TEST_CASE("resolutions of higher rank functors") {
    std::mt19937_64 rng(83);
    for (long p : {2L, 3L}) {
        for (int trial = 0; trial < 12; ++trial) {
            std::size_t r = 2 + trial % 3;
            GentleFunctor f = random_gentle(p, 3, r, rng);
            GentleResolution res = gentle_resolution(f);
            CHECK(res.q0_levels.size() >= r);
            CHECK(res.q0_levels.size() == res.q1_levels.size() + r);
        }
        GentleResolution z = gentle_resolution(gentle_zero(p, 2));
        CHECK(z.q0.is_zero());
    }
}

TEST_CASE("duality reverses diagrams") {
    for (long p : {2L, 3L}) {
        for (int n = 0; n <= 4; ++n)
            for (int l = 0; l <= n; ++l)
                CHECK(diagram_of(gentle_dual(gentle_P(p, n, l))) ==
                      diagram_of(gentle_J(p, n, l)));
    }
    std::mt19937_64 rng(7);
    GentleFunctor f = random_gentle(3, 3, 2, rng);
    gentle_validate(gentle_dual(f));
}

TEST_CASE("deflation of cyclic projectives") {
    for (long p : {2L, 3L}) {
        for (int n = 0; n <= 3; ++n) {
            for (int k = 0; k <= n; ++k) {
                GentleFunctor d = deflate(standard_P(p, n, k));
                CHECK(gentle_rank(d) == 1);
                CHECK(diagram_of(d) == diagram_of(gentle_P(p, n, k)));
            }
        }
    }
}

TEST_CASE("deflation inverts inflation") {
    std::mt19937_64 rng(31);
    for (long p : {2L, 3L}) {
        for (int trial = 0; trial < 10; ++trial) {
            GentleFunctor f = random_gentle(p, 3, 2 + trial % 3, rng);
            Mackey x = inflate(f);
            GentleFunctor g = deflate(x);
            REQUIRE(g.vertex.size() == f.vertex.size());
            for (int k = 0; k <= f.n; ++k) CHECK(g.vertex[k] == f.vertex[k]);
            for (int k = 0; k < f.n; ++k) {
                CHECK(g.down[k].mat == f.down[k].mat);
                CHECK(g.up[k].mat == f.up[k].mat);
            }
        }
    }
}

TEST_CASE("deflation of natural maps") {
    long p = 3;
    int n = 2;
    Mackey x = standard_P(p, n, 1);
    Matrix elt(x.level[2].gens(), 1);
    elt.at(0, 0) = 1;
    elt.at(1, 0) = Scalar(p);
    Nat phi = nat_from_element(x, 2, elt);
    GentleNat d = deflate_nat(phi);
    gentle_nat_validate(d);
}
