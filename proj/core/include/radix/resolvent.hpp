#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radix/formula.hpp"

namespace radix {

// z = u * y^l for the first l > 0 with a nonzero coefficient u in an element E
// of F_level, together with the polynomial q over F_{level-1} with q(z) = E.
struct LastRadicalData {
  std::size_t level = 0;
  std::uint32_t k = 0;
  std::uint32_t l = 0;
  TowerElem u;          // level - 1
  long a = 0;           // a k + b l = 1, |b| minimal
  long b = 0;
  TowerPoly q;          // degree < k, coefficient of z^1 equal to 1
  TowerElem z_power;    // z^k = u^k p_{level-1}^l, at level - 1
};

// (a, b) with a k + b l = 1 and |b| minimal, ties to positive b. gcd(k, l) = 1.
std::pair<long, long> bezout_min_b(std::uint32_t k, std::uint32_t l);

// Throws DomainError when E has no y_level term (E already lies one level down).
LastRadicalData extract_last_radical(const Tower& tower, const TowerElem& e, std::size_t level);
LastRadicalData extract_last_radical(const FormalRadicalFormula& f);

// Sum_j e^-j q(e^j z) / k, computed term by term without the closed form.
TowerPoly resolvent_average_symbolic(const Tower& tower, const TowerPoly& q, std::uint32_t k);
// Whether a polynomial over F equals z.
bool is_pure_z(const Tower& tower, const TowerPoly& p);

struct ResolventAverage {
  MPoly value;
  std::vector<IdentityCheck> checks;
  bool valid() const { return all_pass(checks); }
};

// The x-polynomials of q(e^j z), j = 0..k-1, for a candidate z; q's
// coefficients are embedded with the witnesses below d.level.
std::vector<RatFunc> conjugate_values(const LastRadicalData& d, const FormalRadicalFormula& f, const MPoly& z);

// Averages given conjugate values, then checks value^k = z^k under the
// embedding, q(e^j value) = values[j], and value = u * witness^l when the
// witness of y_level is known.
ResolventAverage resolvent_average(const LastRadicalData& d, const FormalRadicalFormula& f,
                                   const std::vector<MPoly>& values);

// z as an x-polynomial from the S_n orbit of the embedding of E (n <= 6):
// values r_0 = E(x), r_j in the orbit, z = Sum_j e^-j r_j / k, accepted once
// every check of resolvent_average passes.
std::optional<ResolventAverage> derive_z_witness(const LastRadicalData& d, const FormalRadicalFormula& f,
                                                 const MPoly& embedded_e);

// prod over S_n of (z - f(x_alpha)), with symmetric coefficients rewritten in
// sigma. n <= 4.
struct ResolventPolynomial {
  std::size_t n = 0;
  std::vector<MPoly> x_coeffs;      // lowest degree first
  std::vector<MPoly> sigma_coeffs;
  bool coefficients_symmetric = false;

  std::string to_string() const;  // in s1..sn and z
};
ResolventPolynomial build_R(const MPoly& f, std::size_t n);

struct AbelStep {
  std::size_t level = 0;
  bool skipped = false;
  std::string note;
  std::optional<LastRadicalData> data;
  std::optional<ResolventAverage> average;
  bool symbolic_telescoping = false;
  std::optional<MPoly> z_witness;
  bool derived = false;
  std::vector<IdentityCheck> checks;  // relations that can be checked after the step
  std::optional<FormalRadicalFormula> result;
};

// One step of the downward induction at `level`: y_level is replaced by
// z = u y^l with z^k = u^k p^l, and y_level = z^b u^-b p^a is substituted in
// every later element. The new witness is u * (old witness)^l, or is derived
// from the resolvent average when the old one is missing.
AbelStep abel_step(const FormalRadicalFormula& f, std::size_t level);

struct AbelReport {
  std::vector<AbelStep> steps;
  FormalRadicalFormula result;
  std::optional<PolyRadicalFormula> poly;
  std::vector<std::string> notes;

  std::string to_text() const;
};

// Steps from level s down to 1; converts the end state to polynomial form
// when every coefficient is a polynomial in sigma.
AbelReport abel_polynomialize(const FormalRadicalFormula& f);

}  // namespace radix
