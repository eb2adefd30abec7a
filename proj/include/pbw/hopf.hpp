#pragma once

// Classifies which finite-dimensional Hopf algebras can act inner-faithfully
// on the filtered algebra, reading everything off the lifted automorphism and
// the shape of the relations. No Hopf algebra is ever materialized: the
// output is a bundle of formal statements about the grouplike symbols y_ii
// attached to an eigenbasis of the automorphism, plus the conclusions they
// force.

#include "pbw/linalg.hpp"
#include "pbw/nakayama.hpp"
#include "pbw/presentation.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pbw {

struct HopfFlags {
    bool assume_semisimple = false;
    bool assume_trivial_hdet = false;
};

enum class HopfCase {
    Diagonal1,             // spectrum free of unity: no eigenvalue or ratio is a root of unity
    Diagonal2,             // distinct spectrum under both assumption flags
    NondiagonalLambda,     // single 2-block at lambda != 1, both flags
    NondiagonalUnipotent,  // single 2-block at 1 with an essential shift
    Inconclusive,
};

std::string hopf_case_name(HopfCase c);

struct HopfCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct HopfConclusion {
    std::string tag;  // dual_of_group_algebra, semisimple, commutative_group_algebra,
                      // cyclic_group_algebra_kZm, trivial_k
    std::vector<std::string> justified_by;  // names of the checks that license it
};

struct HopfReport {
    HopfCase kase = HopfCase::Inconclusive;
    std::vector<HopfCheck> verified_hypotheses;
    std::vector<std::string> grouplike_relations;
    std::vector<HopfConclusion> conclusions;  // empty exactly when inconclusive
    HopfFlags assumptions_used;
};

// Searches for a generator shift x_i -> x_i + s_i cancelling every relation's
// degree-(top-1) part, by solving the linear system the shift induces there.
// Returns the shifted presentation and the shift; identity shift (and the
// input untouched) when the system has no solution. Free coordinates are
// pinned to zero so the answer is deterministic.
std::pair<Presentation, RatVec> normalize_presentation(const Presentation& p);

// True when some term of rel factors as u1*(x_i x_j)*u2 while the word
// u1*u2 (the pair deleted) also appears with a nonzero coefficient, and no
// other term is a constant. Such a relation forces y_ii * y_jj = 1 on the
// grouplike symbols. Letters are 0-based; i == j never matches.
bool match_pattern_a(const NCPoly& rel, int i, int j);

// True when some term contains an adjacent pair x_i x_j whose transposition
// (same cofactors u1, u2) is also a term. Forces y_ii and y_jj to commute.
bool match_pattern_b(const NCPoly& rel, int i, int j);

// Decision tree on the lifted automorphism phi (matrix + shift) of p:
// rationally diagonalizable spectrum with no eigenvalue 1 enters the diagonal
// cases (relations are rewritten in an eigenbasis of phi before the pattern
// scan); a lone 2x2 Jordan block on two generators enters the nondiagonal
// cases. Every conclusion carries the names of the checks that justify it;
// anything outside the tree is reported inconclusive rather than guessed.
HopfReport classify(const Presentation& p, const AffineMap& phi, HopfFlags flags);

}  // namespace pbw
