#pragma once

// Reader and writer for the .alg presentation format.
//
//   # comment (anywhere; rest of line)
//   generators: x1, x2
//   relations:
//     x1*x2 - 2*x2*x1 - 3
//   graded_nakayama: [2,0;0,1/2]
//   central: t
//   options:
//     degree_bound = 12
//
// Expressions use explicit '*', '^' with a positive integer exponent on a
// generator, parentheses, and rational literals like 5 or 1/2. Sections may
// appear in any order; 'generators' is required. The name 't' is reserved
// for the homogenizing generator and is only accepted when declared central.

#include "pbw/presentation.hpp"

#include <stdexcept>
#include <string>

namespace pbw {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

AlgFile parse_alg_file(const std::string& text);

// Parses a single expression against a fixed alphabet (line/col reported
// relative to the given string). Used by tests and by parse_alg_file itself.
NCPoly parse_expression(const std::string& text, const Alphabet& alphabet);

std::string render_poly(const NCPoly& f, const Alphabet& alphabet);
std::string render_matrix(const RatMat& m);
std::string render_alg_file(const AlgFile& file);

}  // namespace pbw
