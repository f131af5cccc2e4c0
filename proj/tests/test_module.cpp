#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "platt/errors.hpp"
#include "platt/module.hpp"

#include <random>

using namespace platt;

namespace {

Matrix mat2(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<Scalar>> conv;
    for (auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return Matrix::from_rows(conv);
}

ModuleMap random_free_map(std::mt19937_64& rng, long p, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> num(-8, 8);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = num(rng);
    return ModuleMap::make(FGModule::free_module(p, c), FGModule::free_module(p, r), m);
}

} // namespace

TEST_CASE("map validation rejects torsion-incompatible entries") {
    FGModule rp{2, 0, {1}}, r{2, 1, {}}, rp2{2, 0, {2}};
    Matrix one(1, 1);
    one.at(0, 0) = 1;
    Matrix two(1, 1);
    two.at(0, 0) = 2;
    CHECK_THROWS_AS(ModuleMap::make(rp, r, one), Error);
    CHECK_THROWS_AS(ModuleMap::make(rp, rp2, one), Error);
    CHECK_NOTHROW(ModuleMap::make(rp, rp2, two));
    CHECK_NOTHROW(ModuleMap::make(r, rp, one));
}

TEST_CASE("entries are stored reduced") {
    FGModule rp2{3, 0, {2}};
    Matrix m(1, 1);
    m.at(0, 0) = Scalar(10);
    auto f = ModuleMap::make(rp2, rp2, m);
    CHECK(f.mat.at(0, 0) == 1);
    // unit denominators reduce to integer representatives
    m.at(0, 0) = Scalar(1) / 2;
    auto g = ModuleMap::make(rp2, rp2, m);
    CHECK(g.mat.at(0, 0) == 5); // 2*5 = 10 = 1 mod 9
}

TEST_CASE("kernel on fixed examples") {
    long p = 3;
    FGModule r2 = FGModule::free_module(p, 2);
    auto pid = ModuleMap::make(r2, r2, Matrix::identity(2).scaled(Scalar(p)));
    CHECK(kernel(pid).mod.is_zero());

    // R -> R/p canonical: kernel is pR ≅ R
    FGModule r = FGModule::free_module(p, 1), rp{p, 0, {1}};
    Matrix one(1, 1);
    one.at(0, 0) = 1;
    auto q = ModuleMap::make(r, rp, one);
    auto k = kernel(q);
    CHECK(k.mod == FGModule::free_module(p, 1));
    CHECK(valuation(k.lift.at(0, 0), p) == 1);

    auto z = ModuleMap::zero(r2, r2);
    auto kz = kernel(z);
    CHECK(kz.mod == r2);
}

TEST_CASE("cokernel on fixed examples") {
    long p = 5;
    FGModule r = FGModule::free_module(p, 1), r2 = FGModule::free_module(p, 2);
    Matrix m(1, 1);
    m.at(0, 0) = p;
    CHECK(cokernel(ModuleMap::make(r, r, m)).mod == FGModule{p, 0, {1}});
    Matrix d(2, 2);
    d.at(0, 0) = p;
    d.at(1, 1) = p * p;
    CHECK(cokernel(ModuleMap::make(r2, r2, d)).mod == FGModule{p, 0, {2, 1}});
    CHECK(cokernel(ModuleMap::identity(r2)).mod.is_zero());
}

TEST_CASE("subquotient of a torsion module") {
    // (R/p^2 generated classes): quotient of R/9 ⊕ R/3 by the diagonal (1,1)
    FGModule m{3, 0, {2, 1}};
    Matrix den = mat2({{1}, {1}});
    auto q = make_subquotient(m, Matrix::identity(2), den);
    CHECK(q.mod == FGModule{3, 0, {1}});
    // the class of (1,1) is zero
    CHECK(q.coords(den).is_zero());
}

TEST_CASE("exactness checker") {
    long p = 2;
    FGModule r = FGModule::free_module(p, 1), rp{p, 0, {1}};
    Matrix pm(1, 1);
    pm.at(0, 0) = p;
    Matrix one(1, 1);
    one.at(0, 0) = 1;
    auto mult_p = ModuleMap::make(r, r, pm);
    auto proj = ModuleMap::make(r, rp, one);
    CHECK(is_exact(mult_p, proj));          // 0 -> R ->p R -> R/p -> 0 middle
    CHECK_FALSE(is_exact(mult_p, mult_p));  // composite p^2 != 0
    auto p2 = ModuleMap::make(r, r, Matrix::identity(1).scaled(Scalar(4)));
    CHECK_FALSE(is_exact(p2, proj)); // image 4R smaller than kernel 2R
}

TEST_CASE("saturation examples and idempotence") {
    long p = 2;
    FGModule r = FGModule::free_module(p, 1), r2 = FGModule::free_module(p, 2);
    Matrix pm(1, 1);
    pm.at(0, 0) = p;
    auto sat = saturation(ModuleMap::make(r, r, pm));
    CHECK(is_unit(sat.mat.at(0, 0), p));

    auto emb1 = ModuleMap::make(r, r2, mat2({{1}, {2}}));
    auto s1 = saturation(emb1);
    CHECK(spans_equal(s1.mat, emb1.mat, p));

    auto emb2 = ModuleMap::make(r, r2, mat2({{2}, {4}}));
    auto s2 = saturation(emb2);
    CHECK(spans_equal(s2.mat, emb1.mat, p));
    // idempotent
    auto s3 = saturation(s2);
    CHECK(spans_equal(s3.mat, s2.mat, p));
}

TEST_CASE("mod-p reduction examples and functoriality") {
    long p = 3;
    FGModule r2 = FGModule::free_module(p, 2);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        auto f = random_free_map(rng, p, 2, 2);
        auto g = random_free_map(rng, p, 2, 2);
        CHECK(mod_p_reduce(g.compose(f)) == mod_p_reduce(g) * mod_p_reduce(f));
    }
    auto pid = ModuleMap::make(r2, r2, Matrix::identity(2).scaled(Scalar(p)));
    CHECK(mod_p_reduce(pid).rank() == 0);
    Matrix a = mat2({{1, 1}, {1, 4}});
    CHECK(mod_p_reduce(ModuleMap::make(r2, r2, a)).rank() == 1);
}

TEST_CASE("rank-nullity and kernel/image duality on random maps") {
    std::mt19937_64 rng(2024);
    for (long p : {2L, 3L}) {
        for (int t = 0; t < 15; ++t) {
            auto f = random_free_map(rng, p, 2 + t % 3, 2 + (t * 5) % 3);
            auto k = kernel(f);
            auto im = image(f);
            CHECK(k.mod.free_rank + im.mod.free_rank == f.dom.free_rank);
            // cokernel of the kernel embedding ≅ image
            auto emb = k.embedding();
            CHECK(cokernel(emb).mod.free_rank == im.mod.free_rank);
            // composite f ∘ embed = 0
            CHECK(f.compose(emb).is_zero_map());
        }
    }
}

TEST_CASE("induced maps between subquotients") {
    long p = 2;
    FGModule r = FGModule::free_module(p, 1);
    Matrix two(1, 1);
    two.at(0, 0) = 2;
    auto cok2 = cokernel(ModuleMap::make(r, r, two)); // R/2
    Matrix four(1, 1);
    four.at(0, 0) = 4;
    auto cok4 = cokernel(ModuleMap::make(r, r, four)); // R/4
    // identity on R induces the projection R/4 -> R/2
    auto indu = induced_map(cok4, cok2, Matrix::identity(1));
    CHECK(indu.mat.at(0, 0) == 1);
    // and multiplication by 2 induces R/2 -> R/4
    auto up = induced_map(cok2, cok4, two);
    CHECK(up.mat.at(0, 0) == 2);
}

TEST_CASE("direct sums normalize generator order") {
    FGModule a{2, 1, {1}}, b{2, 0, {3}};
    auto s = FGModule::direct_sum(a, b);
    CHECK(s == FGModule{2, 1, {3, 1}});
    auto f = ModuleMap::direct_sum(ModuleMap::identity(a), ModuleMap::identity(b));
    CHECK(f.mat == Matrix::identity(3));
    CHECK(f.dom == s);
}
