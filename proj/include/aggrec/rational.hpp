#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace aggrec {

// Exact arithmetic is carried by GMP throughout.  mpq_class already keeps
// the canonical form we rely on everywhere: gcd(|num|, den) = 1, den > 0.
using Int = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational rational(long num, long den = 1) {
    AGGREC_CHECK(den != 0, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Canonical text form: "a" or "a/b", no whitespace, b > 0.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool looks_like_rational(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    bool digits = false, slash = false, den_digits = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (slash || !digits) return false;
            slash = true;
        } else if (c >= '0' && c <= '9') {
            (slash ? den_digits : digits) = true;
        } else {
            return false;
        }
    }
    return digits && (!slash || den_digits);
}

// Parses "a" or "a/b".  Decimal notation is rejected on purpose: model
// parameters must be exact.
inline Rational parse_rational(const std::string& s) {
    if (!looks_like_rational(s))
        throw parse_error("not a rational literal: '" + s + "'");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw parse_error("not a rational literal: '" + s + "'");
    if (sgn(q.get_den()) == 0)
        throw parse_error("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

inline Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    AGGREC_CHECK(e > 0 || !is_zero(base), "0 raised to a negative power");
    Rational b = (e < 0) ? Rational(base.get_den(), base.get_num()) : base;
    if (e < 0) b.canonicalize();
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Generalized binomial coefficient C(a, k) for rational a and k >= 0.
inline Rational binomial(const Rational& a, unsigned long k) {
    Rational acc(1);
    for (unsigned long j = 0; j < k; ++j) {
        acc *= (a - Rational(static_cast<long>(j)));
        acc /= Rational(static_cast<long>(j) + 1);
    }
    return acc;
}

inline Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// True iff q is an integer that fits a long.
inline bool fits_long(const Rational& q, long& out) {
    if (q.get_den() != 1) return false;
    if (!q.get_num().fits_slong_p()) return false;
    out = q.get_num().get_si();
    return true;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace aggrec
