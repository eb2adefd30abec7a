#pragma once

// Small dense exact linear algebra over the rationals. Matrices here are a
// handful of rows at most, so plain Gaussian elimination with first-nonzero
// pivoting is both fast enough and deterministic.

#include "pbw/freealg.hpp"
#include "pbw/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pbw {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row major, rectangular

RatMat mat_identity(std::size_t n);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_apply(const RatMat& a, const RatVec& v);
RatMat mat_transpose(const RatMat& a);
RatMat mat_sub(const RatMat& a, const RatMat& b);
RatMat mat_scale(const RatMat& a, const Rational& s);
RatMat mat_pow(const RatMat& a, int e);
bool mat_equal(const RatMat& a, const RatMat& b);
bool mat_is_identity(const RatMat& a);
bool mat_is_diagonal(const RatMat& a);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(RatMat& m);

std::size_t mat_rank(RatMat m);
Rational mat_det(RatMat m);
std::optional<RatMat> mat_inverse(const RatMat& m);

// One solution of A x = b with free variables set to 0, or nullopt.
std::optional<RatVec> solve_linear(RatMat a, RatVec b);

// Basis of the right nullspace of A, rows canonical from the RREF.
std::vector<RatVec> nullspace(RatMat a);

// Coefficients of det(x I - M), ascending, exact (Faddeev-LeVerrier).
RatVec char_poly(const RatMat& m);

// Affine substitution x_i -> sum_j matrix[i][j] x_j + shift[i].
struct AffineMap {
    RatMat matrix;
    RatVec shift;
};

bool operator==(const AffineMap& a, const AffineMap& b);

// apply(compose(f, g), p) == apply(f, apply(g, p)).
AffineMap affine_compose(const AffineMap& f, const AffineMap& g);

std::vector<NCPoly> affine_images(const AffineMap& phi);
NCPoly apply_affine_map(const AffineMap& phi, const NCPoly& f);

}  // namespace pbw
