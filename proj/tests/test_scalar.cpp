#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "platt/scalar.hpp"

using namespace platt;

TEST_CASE("valuation basics") {
    CHECK(valuation(Scalar(1), 5) == 0);
    CHECK(valuation(Scalar(0), 5) == kInfVal);
    CHECK(valuation(Scalar(75), 5) == 2);
    CHECK(valuation(Scalar(75), 3) == 1);
    CHECK(valuation(Scalar(1) / 3, 2) == 0);
    CHECK(valuation(Scalar(4) / 3, 2) == 2);
    CHECK(valuation(Scalar(1) / 2, 2) == -1);
}

TEST_CASE("ring membership and units") {
    CHECK(is_integral(Scalar(1) / 3, 2));
    CHECK_FALSE(is_integral(Scalar(1) / 2, 2));
    CHECK(is_unit(Scalar(1) / 3, 2));
    CHECK_FALSE(is_unit(Scalar(2), 2));
    CHECK_FALSE(is_unit(Scalar(0), 2));
}

TEST_CASE("reduce_mod gives canonical representatives") {
    // 1/3 = 3^{-1} = 3 mod 8  (3*3 = 9 = 1 mod 8)
    CHECK(reduce_mod(Scalar(1) / 3, 2, 3) == 3);
    CHECK(reduce_mod(Scalar(10), 2, 2) == 2);
    CHECK(reduce_mod(Scalar(-1), 3, 2) == 8);
    CHECK(reduce_mod(Scalar(0), 5, 4) == 0);
    // reduction is a ring hom: (1/3) * 3 = 1
    CHECK(reduce_mod(Scalar(reduce_mod(Scalar(1) / 3, 2, 3)) * 3, 2, 3) == 1);
}

TEST_CASE("residue mod p") {
    CHECK(residue_mod_p(Scalar(7), 5) == 2);
    CHECK(residue_mod_p(Scalar(1) / 2, 3) == 2);
    CHECK(residue_mod_p(Scalar(6), 3) == 0);
}

TEST_CASE("string round trip") {
    CHECK(scalar_to_string(Scalar(5)) == "5");
    CHECK(scalar_to_string(Scalar(-3) / 7) == "-3/7");
    CHECK(scalar_from_string("22/7") == Scalar(22) / 7);
    CHECK(scalar_from_string("-4") == Scalar(-4));
    CHECK(scalar_from_string(scalar_to_string(Scalar(355) / 113)) == Scalar(355) / 113);
    CHECK_THROWS(scalar_from_string("1/0"));
    CHECK_THROWS(scalar_from_string("abc"));
}
