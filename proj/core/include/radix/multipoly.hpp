#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radix/cyclotomic.hpp"
#include "radix/perm.hpp"

namespace radix {

using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponents& e);

// Graded lexicographic order, x1 > x2 > ... > xn. Used as a "greater" comparator
// so that the first entry of a term map is the leading term.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Maps a variable index to its printed name.
using VarNamer = std::function<std::string(std::size_t)>;
VarNamer indexed_names(std::string prefix, std::size_t first = 1);

// Sparse multivariate polynomial over CycScalar. Zero coefficients are never
// stored, so structural equality of the term maps is semantic equality.
class MPoly {
 public:
  using TermMap = std::map<Exponents, CycScalar, GrlexGreater>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const CycScalar& c);
  // The variable with 0-based index i.
  static MPoly variable(std::size_t nvars, std::size_t i);
  static MPoly monomial(Exponents exps, const CycScalar& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  // The constant term's value when the polynomial is constant.
  std::optional<CycScalar> constant_value() const;
  CycScalar coefficient(const Exponents& e) const;

  // Leading term in grlex. Precondition: nonzero.
  const std::pair<const Exponents, CycScalar>& leading_term() const;
  std::uint32_t total_degree() const;  // 0 for the zero polynomial
  std::uint32_t degree_in(std::size_t var) const;
  std::vector<bool> occurring_vars() const;
  // lcm of the cyclotomic orders of all coefficients.
  std::uint32_t coefficient_order() const;

  // Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const CycScalar& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  MPoly& operator*=(const CycScalar& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const CycScalar& c) { return a *= c; }
  friend MPoly operator*(const CycScalar& c, MPoly a) { return a *= c; }

  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(std::uint32_t exponent) const;

  // Same polynomial in a ring with more variables (new variables appended).
  MPoly extend(std::size_t nvars) const;

  std::string to_string(const VarNamer& names) const;
  std::string to_string() const;  // x1..xn

 private:
  std::size_t nvars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

// Replaces variable i by images[i]. Every variable occurring in f must have an
// image; all images must have target_nvars variables.
MPoly substitute(const MPoly& f, std::span<const std::optional<MPoly>> images, std::size_t target_nvars);
MPoly substitute(const MPoly& f, std::span<const MPoly> images);

// f(x_alpha): variable i is replaced by x_{alpha(i)}.
MPoly permute_vars(const MPoly& f, const Perm& alpha);

// The i-th elementary symmetric polynomial in n variables, 1 <= i <= n.
MPoly elem_sym(std::size_t n, std::size_t i);
// g(sigma_1, ..., sigma_n) for g in n variables read as sigmas.
MPoly expand_elementary(const MPoly& g);

// First transposition (1 m) that does not fix f, if any.
std::optional<Perm> symmetry_violation(const MPoly& f);
bool is_symmetric(const MPoly& f);
// Invariance under the generators (1 2 m), 3 <= m <= n, of A_n.
bool is_even_symmetric(const MPoly& f);

// g with g(sigma_1..sigma_n) = f, by leading-term reduction. The result is
// re-expanded and compared to f before it is returned.
// Throws NotSymmetric naming a violating transposition.
MPoly symmetrize(const MPoly& f);

CycScalar eval(const MPoly& f, std::span<const CycScalar> point);

struct KthRoot {
  enum class Status { Root, NoRoot, Undecided };
  Status status;
  std::optional<MPoly> root;
};

// g with g^k = f when one exists. Undecided when the leading coefficient has
// no rational k-th root (its root may still exist in some cyclotomic field).
KthRoot kth_root_poly(const MPoly& f, std::uint32_t k);

// q with q * g = f, if g divides f. Division by a single polynomial is exact
// iff the grlex division remainder vanishes.
std::optional<MPoly> exact_divide(const MPoly& f, const MPoly& g);

// Vandermonde product prod_{i<j} (x_i - x_j).
MPoly vandermonde(std::size_t n);

}  // namespace radix
