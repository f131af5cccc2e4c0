#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "platt/matrix.hpp"

#include <random>

using namespace platt;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long p) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> denpick(0, 3);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            long den = 1 + denpick(rng) * 2; // odd-ish; skip multiples of p below
            if (den % p == 0) den += 2;
            m.at(i, j) = Scalar(num(rng)) / den;
        }
    return m;
}

} // namespace

TEST_CASE("snf on fixed examples") {
    auto id2 = smith_normal_form(Matrix::identity(2), 5);
    REQUIRE(id2.diag.size() == 2);
    CHECK(id2.diag[0] == 0);
    CHECK(id2.diag[1] == 0);

    // [[1,1],[1,1+p]]: subtract row 1 from row 2 and col 1 from col 2 by
    // hand to get diag(1, p)
    for (long p : {2L, 3L, 5L}) {
        Matrix a(2, 2);
        a.at(0, 0) = 1;
        a.at(0, 1) = 1;
        a.at(1, 0) = 1;
        a.at(1, 1) = Scalar(1 + p);
        auto s = smith_normal_form(a, p);
        CHECK(s.diag == std::vector<int>{0, 1});
        CHECK(s.reassemble(2, 2, p) == a);
    }

    auto z = smith_normal_form(Matrix(1, 1), 3);
    CHECK(z.diag == std::vector<int>{kInfVal});
    CHECK(z.rank == 0);
}

TEST_CASE("snf round trip on random matrices") {
    std::mt19937_64 rng(987);
    for (long p : {2L, 3L}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t r = 1 + trial % 5, c = 1 + (trial * 7) % 5;
            Matrix a = random_matrix(rng, r, c, p);
            auto s = smith_normal_form(a, p);
            CHECK(s.reassemble(r, c, p) == a);
            CHECK((s.left * s.left_inv) == Matrix::identity(r));
            CHECK((s.right * s.right_inv) == Matrix::identity(c));
            CHECK(s.left.all_integral(p));
            CHECK(s.left_inv.all_integral(p));
            CHECK(s.right.all_integral(p));
            CHECK(s.right_inv.all_integral(p));
            for (std::size_t i = 1; i < s.rank; ++i) CHECK(s.diag[i - 1] <= s.diag[i]);
        }
    }
}

TEST_CASE("kernel basis and rank-nullity") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = random_matrix(rng, 3, 4, 3);
        Matrix k = kernel_basis(a, 3);
        CHECK((a * k).is_zero());
        auto s = smith_normal_form(a, 3);
        CHECK(s.rank + k.cols() == a.cols());
    }
}

TEST_CASE("solve_in_span membership") {
    Matrix a(2, 2);
    a.at(0, 0) = 2;
    a.at(1, 1) = 4; // span over Z_(3): full rank, everything solvable
    CHECK(solve_in_span(a, Matrix::identity(2), 3).has_value());
    // over Z_(2): columns span 2R ⊕ 4R; e1 is not in the span
    CHECK_FALSE(solve_in_span(a, Matrix::identity(2), 2).has_value());
    Matrix b(2, 1);
    b.at(0, 0) = 6;
    b.at(1, 0) = 4;
    auto y = solve_in_span(a, b, 2);
    REQUIRE(y.has_value());
    CHECK((a * *y) == b);
}

TEST_CASE("spans_equal detects lattice equality not just rank") {
    Matrix a = Matrix::identity(2);
    Matrix b = Matrix::identity(2);
    b.at(0, 0) = 2;
    CHECK_FALSE(spans_equal(a, b, 2));
    CHECK(spans_equal(a, b, 3));
    Matrix c(2, 3);
    c.at(0, 0) = 1;
    c.at(1, 1) = 1;
    c.at(0, 2) = 5;
    c.at(1, 2) = 7;
    CHECK(spans_equal(a, c, 2));
}

TEST_CASE("inverse and unimodularity") {
    std::mt19937_64 rng(7);
    Matrix t = Matrix::identity(3);
    t.at(0, 1) = 3;
    t.at(2, 0) = -5;
    CHECK((t * t.inverse()) == Matrix::identity(3));
    CHECK(t.is_unimodular(2));
    Matrix s = Matrix::identity(2).scaled(Scalar(2));
    CHECK_FALSE(s.is_unimodular(2));
    CHECK(s.is_unimodular(3));
}

TEST_CASE("fmatrix rank") {
    FMatrix a(3, 2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    a.at(1, 1) = 1;
    CHECK(a.rank() == 1);
    FMatrix id(5, 3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(id.rank() == 3);
    CHECK(FMatrix(2, 4, 2).rank() == 0);
}

TEST_CASE("empty matrices are first class") {
    Matrix e(0, 3), f(3, 0);
    CHECK((f * e).rows() == 3);
    CHECK((f * e).cols() == 3);
    CHECK((f * e).is_zero());
    CHECK((e * f).rows() == 0);
    auto s = smith_normal_form(e, 2);
    CHECK(s.rank == 0);
    CHECK(kernel_basis(e, 2).cols() == 3);
    CHECK(lattice_basis(f, 2).cols() == 0);
    CHECK(solve_in_span(f, Matrix(3, 1), 2).has_value());
}
