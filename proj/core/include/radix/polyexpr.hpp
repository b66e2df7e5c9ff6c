#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "radix/ratfunc.hpp"

namespace radix {

// Which variable names an expression may use. A prefix such as "s" with
// offset 0 and count 3 accepts s1, s2, s3 and maps them to variables 0..2.
struct VarBlock {
  std::string prefix;
  std::size_t offset = 0;
  std::size_t count = 0;
  std::size_t first_index = 1;  // a0.. starts at 0
};

struct ExprScope {
  std::size_t nvars = 0;
  std::vector<VarBlock> blocks;
  // Largest total degree a literal power may produce.
  std::uint32_t max_degree = 256;
};

// Parses +, -, *, /, ^ over integers, variables, i (= w(4)) and w(q).
// Positions in errors are reported relative to (line, column).
RatFunc parse_ratfunc(std::string_view text, const ExprScope& scope, std::size_t line = 1, std::size_t column = 1);
// Same grammar; only constant denominators are accepted.
MPoly parse_poly(std::string_view text, const ExprScope& scope, std::size_t line = 1, std::size_t column = 1);

// Names for printing in a scope.
VarNamer scope_names(const ExprScope& scope);

}  // namespace radix
