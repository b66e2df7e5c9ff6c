#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "radix/multipoly.hpp"
#include "radix/report.hpp"
#include "radix/tower.hpp"

namespace radix {

// x = p_s(a, z) with z_j^k_j = p_{j-1}(a, z_1..z_{j-1}); p_j has the n + j
// variables a_0..a_{n-1}, z_1..z_j. Witnesses (in x) are optional here.
struct SolvabilityScheme {
  std::size_t n = 0;
  std::vector<std::uint32_t> ks;
  std::vector<MPoly> ps;
  std::vector<std::optional<MPoly>> witnesses;

  std::size_t s() const noexcept { return ks.size(); }
  friend bool operator==(const SolvabilityScheme&, const SolvabilityScheme&) = default;
};

// p_j in sigma_1..sigma_n, f_1..f_j; witness f_j in x_1..x_n.
struct PolyRadicalFormula {
  std::size_t n = 0;
  std::vector<std::uint32_t> ks;
  std::vector<MPoly> ps;
  std::vector<MPoly> witnesses;

  std::size_t s() const noexcept { return ks.size(); }
  friend bool operator==(const PolyRadicalFormula&, const PolyRadicalFormula&) = default;
};

// Tower data plus the target p_s at level s. Witnesses are optional per level.
struct FormalRadicalFormula {
  Tower tower;
  TowerElem target;
  std::vector<std::optional<MPoly>> witnesses;

  std::size_t n() const { return tower.n(); }
  std::size_t s() const { return tower.height(); }
};

bool structurally_equal(const FormalRadicalFormula& a, const FormalRadicalFormula& b);

using Document = std::variant<SolvabilityScheme, PolyRadicalFormula, FormalRadicalFormula>;
bool structurally_equal(const Document& a, const Document& b);

// Throws Mismatch / DomainError when arities or exponents are off.
void validate(const SolvabilityScheme& f);
void validate(const PolyRadicalFormula& f);

struct VerificationReport {
  std::string kind;
  std::vector<IdentityCheck> checks;

  bool valid() const { return all_pass(checks); }
  std::string to_text() const;
};

// (1) f_j^k_j = p_{j-1}(sigma, f_1..f_{j-1}) for each j; (2) x1 = p_s(sigma, f).
VerificationReport verify_poly_formula(const PolyRadicalFormula& f);
// Witness relations and, when every witness is present, x1 = target.
VerificationReport verify_formal_formula(const FormalRadicalFormula& f);
// Through the Vieta substitution when all witnesses are given; otherwise the
// tower form is checked and every relation lacking a witness fails.
VerificationReport verify_scheme(const SolvabilityScheme& f);
VerificationReport verify_document(const Document& d);

// Leading term and full difference rhs - lhs, for report lines.
std::string describe_difference(const MPoly& diff);

// a_j -> (-1)^(n-j) sigma_{n-j}, z_j -> y_j; nonpower checks run on every level.
FormalRadicalFormula vieta_convert(const SolvabilityScheme& s);
// The same substitution, kept in polynomial form. Needs every witness.
PolyRadicalFormula vieta_poly(const SolvabilityScheme& s);

// Composite k_j become chains of prime radicals in ascending order; k_j = 1
// is removed by substitution. Throws DomainError on k_j = 0.
SolvabilityScheme factor_radicals(const SolvabilityScheme& f);
PolyRadicalFormula factor_radicals(const PolyRadicalFormula& f);
FormalRadicalFormula factor_radicals(const FormalRadicalFormula& f);

// Builds a tower level by level. ps[j] is a function of sigma_1..sigma_n,
// y_1..y_j; the last entry becomes the target. Levels flagged in `asserted`
// (index j-1 for level j) are attested by the caller, the rest are checked.
FormalRadicalFormula tower_from_ratfuncs(std::size_t n, const std::vector<std::uint32_t>& ks,
                                         const std::vector<RatFunc>& ps, const std::vector<bool>& asserted = {});

FormalRadicalFormula to_tower(const PolyRadicalFormula& f);
// Needs all witnesses and coefficients without sigma denominators.
PolyRadicalFormula to_poly_formula(const FormalRadicalFormula& f);

enum class Builtin { Degree2, Degree3 };
std::optional<Builtin> builtin_from_name(std::string_view name);
PolyRadicalFormula builtin(Builtin which);

}  // namespace radix
