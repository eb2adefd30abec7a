#pragma once

// Univariate polynomials over the rationals: just enough exact machinery for
// characteristic polynomials (squarefree split, rational roots, certified
// factorization through degree 4) and for cyclotomic comparisons.

#include "pbw/rational.hpp"

#include <string>
#include <vector>

namespace pbw {

// Coefficients ascending, no trailing zeros; empty vector is the zero polynomial.
using UPoly = std::vector<Rational>;

UPoly up_trim(UPoly p);
int up_degree(const UPoly& p);  // -1 for zero
bool up_is_zero(const UPoly& p);
UPoly up_add(const UPoly& a, const UPoly& b);
UPoly up_sub(const UPoly& a, const UPoly& b);
UPoly up_mul(const UPoly& a, const UPoly& b);
UPoly up_scale(UPoly a, const Rational& s);
UPoly up_monic(UPoly a);
// Quotient and remainder of a by b (b nonzero).
void up_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
bool up_divides(const UPoly& b, const UPoly& a);
UPoly up_gcd(UPoly a, UPoly b);  // monic gcd
UPoly up_derivative(const UPoly& p);
Rational up_eval(const UPoly& p, const Rational& x);
UPoly up_compose_shift(const UPoly& p, const Rational& a);  // p(x + a)
std::string up_str(const UPoly& p, const std::string& var = "x");

// Yun's algorithm: returns pairs (squarefree factor, multiplicity) with
// product f = lc * prod factor^mult; factors monic, multiplicities ascending.
std::vector<std::pair<UPoly, int>> up_squarefree(const UPoly& p);

// All rational roots of p (without multiplicity), sorted ascending.
// Sets `complete` false if divisor enumeration hit its cap.
std::vector<Rational> up_rational_roots(const UPoly& p, bool& complete);

struct UFactor {
    UPoly poly;  // monic
    int multiplicity = 1;
    bool certified_irreducible = true;
};

// Factorization of a nonzero polynomial into monic factors with
// multiplicity. Pieces of degree <= 4 are certified irreducible over Q;
// a squarefree piece of degree >= 5 with no rational root is returned whole
// with certified_irreducible = false. Factors sorted by (degree, coeffs).
std::vector<UFactor> up_factor(const UPoly& p);

long long euler_phi(long long n);
UPoly cyclotomic(int n);

// For p irreducible over Q: the order n such that p = Phi_n, or 0 if the
// roots of p are not roots of unity.
int root_of_unity_order(const UPoly& p);

}  // namespace pbw
