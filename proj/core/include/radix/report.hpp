#pragma once

#include <optional>
#include <string>
#include <vector>

namespace radix {

// One checked identity or proof step, rendered as a single report line.
struct IdentityCheck {
  std::string label;
  bool pass = false;
  // Human-readable evidence on failure (difference, leading term, ...).
  std::string detail;
};

inline bool all_pass(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

inline std::optional<std::size_t> first_failure(const std::vector<IdentityCheck>& checks) {
  for (std::size_t i = 0; i < checks.size(); ++i)
    if (!checks[i].pass) return i;
  return std::nullopt;
}

inline std::string render_line(const IdentityCheck& c) {
  std::string line = (c.pass ? "PASS " : "FAIL ") + c.label;
  if (!c.detail.empty()) line += " ; " + c.detail;
  return line;
}

}  // namespace radix
