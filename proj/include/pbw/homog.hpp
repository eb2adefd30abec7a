#pragma once

// Homogenization with a central degree-one generator and the two
// specializations that undo it. The new generator is named t, takes index 0,
// and every existing generator index shifts up by one; commutation relations
// x*t - t*x are appended so completed bases can push t to the left.

#include "pbw/presentation.hpp"

#include <optional>

namespace pbw {

// Pads every term of f up to target_degree with right-appended powers of the
// new central letter; f is given over the original alphabet, the result over
// the extended one.
NCPoly homogenize_poly(const NCPoly& f, int target_degree);

// Homogenizes each relation to its own degree and appends the commutators.
Presentation homogenize_presentation(const Presentation& p);

// Sets the given letter to 1: deletes it from every word, shifts higher
// letter indices down, and merges collapsing terms.
NCPoly specialize_one(const NCPoly& f, int letter);

// Sets the given letter to 0: drops every term containing it, then shifts
// higher letter indices down.
NCPoly specialize_zero(const NCPoly& f, int letter);

// Applies the corresponding specialization to every relation of p, removing
// the central generator (which must be declared). Relations that collapse to
// zero are dropped.
Presentation specialize_presentation_one(const Presentation& p);
Presentation specialize_presentation_zero(const Presentation& p);

// Smallest gap between the degree of f and the degree of a nonzero lower
// homogeneous component; empty when f is homogeneous.
std::optional<int> poly_degree_drop(const NCPoly& f);

// Minimum of poly_degree_drop over the relations; empty when every relation
// is homogeneous, i.e. the presentation is graded as given.
std::optional<int> presentation_degree_drop(const Presentation& p);

}  // namespace pbw
