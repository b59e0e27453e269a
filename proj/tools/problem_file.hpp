#pragma once

#include "taylorcert/certify.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tcert {

struct ParsedProblem {
  ProblemSpec spec;
  std::vector<std::string> warnings;
};

/// Parses the key-value problem format, one assignment per line:
///
///   f = "x^2 + 1/4*y^2"
///   x0 = "0"
///   y0 = "-1"
///   degree = 9
///   x1 = "1/5"
///   r1 = "1/2"          # optional, default 1
///   r2 = "1"            # optional, default 1
///   rounding = "exact"  # or "outward:2"
///   width = "1e-12"     # optional enclosure width
///
/// Rationals may be integers, decimals (converted exactly) or p/q. `#` starts
/// a comment. Throws InputError with "line L, column C" for syntax errors and
/// the field name for semantic ones.
ParsedProblem parse_problem(std::string_view text);

ParsedProblem load_problem(const std::string& path);

/// Reads a whole file; throws InputError if it cannot be opened.
std::string read_text_file(const std::string& path);

/// Polynomial file: an expression in x, possibly split across lines; `#`
/// starts a comment.
Polynomial load_polynomial(const std::string& path);

}  // namespace tcert
