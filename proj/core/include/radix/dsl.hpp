#pragma once

#include <string>
#include <string_view>

#include "radix/formula.hpp"

namespace radix {

struct ParseOptions {
  // Cap on the total degree of any literal power in an expression.
  std::uint32_t max_degree = 256;
};

// Line-oriented formula documents:
//
//   polyformula n=2 s=1     # or: scheme, towerformula
//   k 2
//   p0 = s1^2 - 4*s2
//   p1 = (s1 + f1)/2
//   witness 1 = x1 - x2
//
// Schemes use a0..a(n-1) and z1..; polynomial formulas s1..sn and f1..;
// towers s1..sn and y1.., with `target =` for p_s and `assert-nonpower j`.
// Throws ParseError with the line and column of the offending text.
Document parse_document(std::string_view text, const ParseOptions& options = {});

std::string serialize(const SolvabilityScheme& f);
std::string serialize(const PolyRadicalFormula& f);
std::string serialize(const FormalRadicalFormula& f);
std::string serialize(const Document& d);

}  // namespace radix
