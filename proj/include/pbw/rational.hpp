#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pbw {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar, always in canonical reduced form.
using Rational = boost::multiprecision::cpp_rational;

inline bool rat_is_zero(const Rational& r) { return r.is_zero(); }

inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

// Renders "p" or "p/q"; q is always positive in canonical form.
inline std::string rat_str(const Rational& r) { return r.str(); }

inline Rational rat_pow(const Rational& base, int exp) {
    if (exp == 0) return Rational(1);
    if (exp < 0) {
        if (rat_is_zero(base)) throw std::domain_error("rat_pow: zero to negative power");
        return Rational(1) / rat_pow(base, -exp);
    }
    Rational acc(1), b = base;
    int e = exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// True iff r is the square of a rational (numerator and denominator both perfect squares).
inline bool rat_sqrt(const Rational& r, Rational& root) {
    if (r < 0) return false;
    Integer n = rat_num(r), d = rat_den(r);
    Integer sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    root = Rational(sn, sd);
    return true;
}

}  // namespace pbw
