#pragma once

// Commutative multivariate polynomials over the rationals, with a lex
// Groebner basis and a rational back-substitution solver. Used for the
// symbolic shift unknowns of lift computations; systems here have at most a
// handful of variables and low degree, so no performance tricks.

#include "pbw/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace pbw {

// Exponent vector; trailing zeros are trimmed so the representation is
// canonical independent of an ambient variable count.
using Expo = std::vector<int>;

// Lex with variable 0 biggest: compares exponents position by position.
struct ExpoLexGreater {
    bool operator()(const Expo& a, const Expo& b) const;
};

struct MPoly {
    std::map<Expo, Rational, ExpoLexGreater> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const { return terms.empty() || terms.begin()->first.empty(); }
    int total_degree() const;
};

bool operator==(const MPoly& a, const MPoly& b);

MPoly mp_constant(const Rational& c);
MPoly mp_variable(int i);
MPoly mp_add(const MPoly& a, const MPoly& b);
MPoly mp_sub(const MPoly& a, const MPoly& b);
MPoly mp_neg(MPoly a);
MPoly mp_mul(const MPoly& a, const MPoly& b);
MPoly mp_scale(MPoly a, const Rational& s);

// Substitutes values[i] for variable i (all variables present in a must be
// covered) and returns the resulting constant.
Rational mp_eval(const MPoly& a, const std::vector<Rational>& values);

// Partial substitution of a single variable by a constant.
MPoly mp_substitute(const MPoly& a, int var, const Rational& value);

// Sign- and content-normalized copy: leading coefficient 1.
MPoly mp_monic(MPoly a);

std::string mp_str(const MPoly& a, const std::vector<std::string>& var_names);

// Hooks so MPoly can serve as an NC-polynomial coefficient ring.
inline bool coeff_is_zero(const MPoly& c) { return c.is_zero(); }
inline MPoly coeff_from_rational(const Rational& c, const MPoly&) { return mp_constant(c); }
inline MPoly operator+(const MPoly& a, const MPoly& b) { return mp_add(a, b); }
inline MPoly operator-(const MPoly& a) { return mp_neg(a); }
inline MPoly operator*(const MPoly& a, const MPoly& b) { return mp_mul(a, b); }
inline MPoly operator*(const MPoly& a, const Rational& s) { return mp_scale(a, s); }

// Lex Groebner basis, monic and inter-reduced, deterministic.
std::vector<MPoly> mp_groebner_lex(std::vector<MPoly> gens);

struct MPSolveResult {
    bool no_solution = false;
    bool positive_dimensional = false;
    // Some branch's eliminant had a factor of degree >= 2 with no rational
    // root, i.e. solutions exist over an extension but were not enumerated.
    bool irrational_branches = false;
    bool search_complete = true;
    std::vector<std::vector<Rational>> points;  // each of length nvars
    std::vector<std::string> eliminants;        // rendered, for diagnostics
};

// All rational solutions of system = 0 in variables 0..nvars-1.
MPSolveResult mp_solve_rational(const std::vector<MPoly>& system, int nvars,
                                const std::vector<std::string>& var_names);

}  // namespace pbw
