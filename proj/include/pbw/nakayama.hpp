#pragma once

// Lifting a graded Nakayama matrix to the filtered algebra, the Calabi-Yau
// test, skew extensions by the lifted automorphism, and the Jordan data of
// the matrix that drives the action classification.

#include "pbw/groebner.hpp"
#include "pbw/linalg.hpp"
#include "pbw/presentation.hpp"
#include "pbw/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pbw {

enum class LiftStatus {
    Ok,                     // at least one verified affine lift found
    NoRationalSolution,     // residual system solvable only outside the rationals, or not at all
    PositiveDimensional,    // residual system does not cut out finitely many shifts
    InconclusiveTruncated,  // a completion or root search hit its bound first
    InvalidGradedMap,       // the matrix is singular or not an endomorphism of the graded algebra
};

std::string lift_status_name(LiftStatus s);

struct LiftResult {
    LiftStatus status = LiftStatus::InconclusiveTruncated;
    std::string method;  // "fast_path_degree_drop" or "polynomial_system"
    // Verified lifts: the complete solution set when status is Ok; zero-pinned
    // representatives of the family when it is PositiveDimensional.
    std::vector<AffineMap> lifts;
    std::vector<std::string> residual_equations;  // the shift system, rendered for audit
    std::vector<std::string> eliminants;          // diagnostics from the shift solver
    bool search_complete = true;
    GB gb;  // basis of the filtered ideal the verification ran against
};

// Checks that x_i -> matrix*x + shift maps each relation of p into the ideal.
// A zero normal form certifies membership even against a truncated basis; a
// nonzero one refutes it only when the basis is complete.
Tri verify_affine_endomorphism(const Presentation& p, const GB& gb, const AffineMap& map);

// Computes the affine lifts of graded_map to the filtered presentation. When
// every relation's lower part sits at least two degrees below its top (or
// there is no lower part at all), the shift-free lift is tried first; the
// general route substitutes symbolic shifts, reduces each relation, and
// solves the resulting commutative system for the shift vector. Every
// returned lift is re-verified by direct substitution. force_residual skips
// the shift-free route (used by tests).
LiftResult lift_nakayama(const Presentation& filtered, const RatMat& graded_map, int degree_bound,
                         bool force_residual = false);

// The algebra is Calabi-Yau precisely when the lifted automorphism is the
// identity map.
bool is_calabi_yau(const AffineMap& lift);

// U[z; phi]: appends a new largest generator z with relations
// z*x_i - phi(x_i)*z. The extension of a filtered algebra by its lifted
// Nakayama automorphism has identity Nakayama matrix, which is emitted so
// the output file can be fed straight back into the lift command.
AlgFile build_skew_extension(const Presentation& p, const AffineMap& lift);

struct JordanFactor {
    UPoly poly;
    int multiplicity;
    bool certified_irreducible;
    int unity_order;  // n when the factor divides x^n - 1 minimally; 0 otherwise
};

struct JordanEigen {
    Rational value;
    int algebraic_multiplicity;
    std::vector<int> block_sizes;  // descending, summing to the multiplicity
    int unity_order;
};

struct JordanInfo {
    std::vector<JordanFactor> factors;  // characteristic polynomial, factored
    std::vector<JordanEigen> rational_eigen;
    bool all_rational = false;  // characteristic polynomial splits over the rationals
    bool certified = true;      // false when some high-degree factor resisted certification
};

JordanInfo jordan_structure(const RatMat& m);

}  // namespace pbw
