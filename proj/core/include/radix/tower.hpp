#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radix/multipoly.hpp"
#include "radix/ratfunc.hpp"
#include "radix/report.hpp"

namespace radix {

// Element of F_level. Level 0 holds a rational function of sigma_1..sigma_n;
// level j > 0 holds the k_j coordinates over F_{j-1} with respect to
// 1, y_j, ..., y_j^(k_j - 1). Arithmetic lives on Tower.
class TowerElem {
 public:
  TowerElem() = default;
  explicit TowerElem(RatFunc base) : level_(0), base_(std::move(base)) {}
  TowerElem(std::size_t level, std::vector<TowerElem> coeffs);

  std::size_t level() const noexcept { return level_; }
  const RatFunc& base() const noexcept { return base_; }
  const std::vector<TowerElem>& coeffs() const noexcept { return coeffs_; }

 private:
  std::size_t level_ = 0;
  RatFunc base_;
  std::vector<TowerElem> coeffs_;
};

// Whether p_{j-1} is known not to be a k_j-th power in F_{j-1}.
enum class Attestation { Unknown, Asserted, Verified };
std::string to_string(Attestation a);

struct TowerSpec {
  std::size_t n = 0;
  std::vector<std::uint32_t> ks;   // k_1..k_s, primes
  std::vector<TowerElem> ps;       // ps[j] = p_j at level j, j = 0..s-1
  std::vector<Attestation> attestations;  // per level 1..s (index j-1)
};

// Univariate polynomial with coefficients in F_level, lowest degree first.
struct TowerPoly {
  std::size_t level = 0;
  std::vector<TowerElem> coeffs;
};

// The radical tower F_0 = C(sigma_1..sigma_n), F_j = F_{j-1}[y_j]/(y_j^k_j - p_{j-1}).
class Tower {
 public:
  explicit Tower(TowerSpec spec);

  const TowerSpec& spec() const noexcept { return spec_; }
  std::size_t n() const noexcept { return spec_.n; }
  std::size_t height() const noexcept { return spec_.ks.size(); }
  std::uint32_t k(std::size_t level) const { return spec_.ks.at(level - 1); }
  // p_j, living at level j.
  const TowerElem& p(std::size_t j) const { return spec_.ps.at(j); }
  Attestation attestation(std::size_t level) const { return spec_.attestations.at(level - 1); }
  std::uint32_t ambient_order() const noexcept { return ambient_; }

  Tower with_attestation(std::size_t level, Attestation a) const;
  // One more level y^k = p, with p living at the current top level.
  Tower extended(std::uint32_t k, TowerElem p, Attestation a) const;

  TowerElem zero(std::size_t level) const;
  TowerElem one(std::size_t level) const;
  TowerElem from_base(const RatFunc& f, std::size_t level = 0) const;
  TowerElem from_scalar(const CycScalar& c, std::size_t level = 0) const;
  TowerElem sigma(std::size_t i) const;  // 1-based, level 0
  TowerElem generator(std::size_t level) const;  // y_level

  // Element of F_level from a polynomial in sigma_1..sigma_n, y_1..y_level.
  // A denominator is allowed when it is free of the y variables.
  TowerElem from_poly(const MPoly& f, std::size_t level) const;
  TowerElem from_ratfunc(const RatFunc& f, std::size_t level) const;

  TowerElem lift(const TowerElem& e, std::size_t level) const;
  // The same element at the lowest level whose field contains it.
  TowerElem lower(const TowerElem& e) const;

  bool is_zero(const TowerElem& e) const;
  bool equal(const TowerElem& a, const TowerElem& b) const;

  TowerElem add(const TowerElem& a, const TowerElem& b) const;
  TowerElem sub(const TowerElem& a, const TowerElem& b) const;
  TowerElem neg(const TowerElem& a) const;
  TowerElem mul(const TowerElem& a, const TowerElem& b) const;
  TowerElem scale(const TowerElem& a, const CycScalar& c) const;
  // Negative exponents go through inverse().
  TowerElem pow(const TowerElem& a, long exponent) const;

  // v with u v = 1, as the product of the nontrivial conjugates of u divided
  // by the norm of u. Elements of a lower field are inverted there; otherwise
  // the level needs a nonpower attestation. Throws AttestationError when the
  // norm vanishes (u is a zero divisor, so y_j^k - p_{j-1} is reducible).
  TowerElem inverse(const TowerElem& u) const;

  // y_j -> e_{k_j}^power * y_j, fixing the other generators. Throws
  // DomainError if e lies above level j and the map does not extend there.
  TowerElem conjugate(const TowerElem& e, std::size_t level, std::uint32_t power) const;

  // Terms of e as (y-exponents of length e.level(), coefficient in F_0), in
  // grlex order of the y-exponents.
  std::vector<std::pair<Exponents, RatFunc>> flatten(const TowerElem& e) const;

  // Image in C(x_1..x_n) with sigma_i -> elem_sym and y_j -> witnesses[j-1].
  RatFunc embed(const TowerElem& e, std::span<const std::optional<MPoly>> witnesses) const;

  // Text in the variables s1..sn, y1..y_level.
  std::string to_string(const TowerElem& e) const;

  // Univariate polynomials over F_level.
  TowerPoly poly_trim(TowerPoly p) const;
  int poly_degree(const TowerPoly& p) const;
  TowerPoly poly_add(const TowerPoly& a, const TowerPoly& b) const;
  TowerPoly poly_sub(const TowerPoly& a, const TowerPoly& b) const;
  TowerPoly poly_mul(const TowerPoly& a, const TowerPoly& b) const;
  std::pair<TowerPoly, TowerPoly> poly_divmod(const TowerPoly& a, const TowerPoly& b) const;
  // Value at x, computed at max(level of p, level of x).
  TowerElem poly_eval(const TowerPoly& p, const TowerElem& x) const;

 private:
  TowerElem mul_same(const TowerElem& a, const TowerElem& b) const;
  TowerElem add_same(const TowerElem& a, const TowerElem& b) const;
  std::pair<TowerElem, TowerElem> at_common_level(const TowerElem& a, const TowerElem& b) const;

  TowerSpec spec_;
  std::uint32_t ambient_ = 1;
  std::vector<MPoly> sigma_images_;
};

struct NonpowerResult {
  enum class Verdict { Verified, Refuted, Undecided };
  Verdict verdict;
  std::optional<TowerElem> root;
};

// Is p_{level-1} a k_level-th power in F_{level-1}? Level 1 is decided through
// kth_root_poly of A*B^(k-1) for p_0 = A/B; higher levels only recognize
// literal powers of generators and of earlier p's.
NonpowerResult nonpower_check(const Tower& tower, std::size_t level);

// Runs nonpower_check on every level and records Verified where it succeeds.
// Returns the first refuted level, if any, through the optional.
Tower attest_levels(const Tower& tower, std::optional<std::size_t>* refuted = nullptr);

struct AnnihilationReport {
  std::size_t level = 0;
  TowerPoly remainder;
  bool remainder_zero = false;
  // Q(e^j y) == 0 in F_level, evaluated directly, j = 0..k-1.
  std::vector<bool> conjugate_roots;

  bool consistent() const;
};

// Remainder of Q modulo t^k - p_{level-1} and the direct evaluation of Q at
// every conjugate of y_level. Q must have coefficients below `level`.
AnnihilationReport check_annihilation(const Tower& tower, const TowerPoly& q, std::size_t level);

struct WitnessReport {
  std::vector<IdentityCheck> checks;
  bool valid() const { return all_pass(checks); }
  std::optional<std::size_t> first_failure_level() const;
};

// Checks witness_j^k_j = p_{j-1}(sigma, witnesses) for every level.
WitnessReport witness_check(const Tower& tower, std::span<const std::optional<MPoly>> witnesses);

}  // namespace radix
