#pragma once

// A finitely presented algebra: generators plus defining relations, with the
// optional data carried by the .alg input format.

#include "pbw/freealg.hpp"
#include "pbw/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pbw {

struct Presentation {
    Alphabet alphabet;
    std::vector<NCPoly> relations;
    // Index of a designated central generator (the homogenizing one), if any.
    std::optional<int> central_index;
};

// A parsed .alg file: the presentation plus optional metadata sections.
struct AlgFile {
    Presentation presentation;
    std::optional<RatMat> graded_nakayama;
    std::map<std::string, std::string> options;
};

}  // namespace pbw
