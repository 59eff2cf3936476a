#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace telesum {

// Exact coefficient arithmetic. mpq_class keeps values canonical:
// gcd(|num|, den) = 1 and den > 0, which is the invariant we rely on.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("rat_pow: zero base with negative exponent");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat out(1);
    while (k) {
        if (k & 1) out *= b;
        b *= b;
        k >>= 1;
    }
    return out;
}

// gcd of rationals as used for polynomial content: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d).
inline Rat rat_content_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    Rat g;
    g.get_num() = int_gcd(a.get_num(), b.get_num());
    g.get_den() = int_lcm(a.get_den(), b.get_den());
    g.canonicalize();
    return abs(g);
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace telesum
