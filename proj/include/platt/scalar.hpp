#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <string>

namespace platt {

using Int = boost::multiprecision::cpp_int;

/// An element of R = Z_(p): a rational whose denominator is coprime to p.
/// Stored in lowest terms by boost's rational backend.
using Scalar = boost::multiprecision::cpp_rational;

/// Valuation of the zero element.
inline constexpr int kInfVal = std::numeric_limits<int>::max();

Int pow_int(const Int& base, long long exp);

/// p-adic valuation of x: the k with x = p^k * unit, or kInfVal for x = 0.
/// Negative values indicate x is not in R (denominator divisible by p).
int valuation(const Scalar& x, long p);

/// True when x lies in R = Z_(p).
bool is_integral(const Scalar& x, long p);

/// True when x is a unit of R (valuation zero).
bool is_unit(const Scalar& x, long p);

/// Reduce x (in R) modulo p^e: returns the integer representative in
/// [0, p^e) congruent to x mod p^e R.
Scalar reduce_mod(const Scalar& x, long p, int e);

/// Residue of a unit-or-deeper element of R in F = R/pR, as an integer in
/// [0, p).
long residue_mod_p(const Scalar& x, long p);

/// Serialization: "a" or "a/b" in lowest terms.
std::string scalar_to_string(const Scalar& x);
Scalar scalar_from_string(const std::string& s);

} // namespace platt
