#include "platt/scalar.hpp"

#include "platt/errors.hpp"

namespace platt {

Int pow_int(const Int& base, long long exp) {
    Int r = 1;
    Int b = base;
    long long e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

namespace {

int padic_val_int(Int v, long p) {
    if (v == 0) return kInfVal;
    int k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

} // namespace

int valuation(const Scalar& x, long p) {
    if (x == 0) return kInfVal;
    int vn = padic_val_int(numerator(x), p);
    int vd = padic_val_int(denominator(x), p);
    return vn - vd;
}

bool is_integral(const Scalar& x, long p) {
    return x == 0 || valuation(x, p) >= 0;
}

bool is_unit(const Scalar& x, long p) { return x != 0 && valuation(x, p) == 0; }

Scalar reduce_mod(const Scalar& x, long p, int e) {
    if (e == kInfVal) return x;
    Int q = pow_int(p, e);
    Int a = numerator(x);
    Int b = denominator(x); // coprime to p for x in R
    // solve c = a * b^{-1} mod p^e via extended Euclid
    Int binv = 0, t = 1, r0 = q, r1 = b % q;
    Int s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int quot = r0 / r1;
        Int r2 = r0 - quot * r1;
        Int s2 = s0 - quot * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1 && r0 != -1) fail("NotIntegral", "denominator not invertible mod p^e");
    binv = (r0 == 1) ? s0 : -s0;
    Int c = (a % q) * (binv % q) % q;
    if (c < 0) c += q;
    (void)t;
    return Scalar(c);
}

long residue_mod_p(const Scalar& x, long p) {
    if (x == 0) return 0;
    if (valuation(x, p) > 0) return 0;
    Scalar r = reduce_mod(x, p, 1);
    return static_cast<long>(numerator(r));
}

std::string scalar_to_string(const Scalar& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

Scalar scalar_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Scalar(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) fail("ParseError", "zero denominator in scalar: " + s);
        return Scalar(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail("ParseError", "malformed scalar: " + s);
    }
}

} // namespace platt
