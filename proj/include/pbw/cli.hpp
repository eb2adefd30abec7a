#pragma once

// Command-line driver: parses .alg files, runs the requested stage of the
// pipeline, and emits a deterministic report (JSON by default, or a short
// text form). Kept out of main() so tests can call it with argument lists
// and capture the streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace pbw {

// args excludes the program name. Returns the process exit code:
// 0 definite positive answer, 2 definite negative, 3 inconclusive
// (a completion or search hit its bound), 1 usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbw
