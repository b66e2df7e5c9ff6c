#pragma once

#include <optional>
#include <string>

#include "radix/multipoly.hpp"

namespace radix {

// Quotient of two MPolys with a nonzero denominator. No multivariate gcd is
// taken: equality is decided by cross-multiplication. The denominator is kept
// as a product of monic factors with multiplicities, so sums use the lcm of
// the factor lists rather than the full product; a factor is cancelled when it
// divides the numerator exactly. Constant denominators fold into the numerator.
class RatFunc {
 public:
  explicit RatFunc(std::size_t nvars = 0);
  RatFunc(MPoly num);  // NOLINT: polynomials are rational functions
  RatFunc(MPoly num, MPoly den);

  static RatFunc constant(std::size_t nvars, const CycScalar& c);

  std::size_t nvars() const noexcept { return num_.nvars(); }
  const MPoly& num() const noexcept { return num_; }
  const MPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  std::optional<MPoly> as_polynomial() const;
  std::optional<CycScalar> constant_value() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);
  RatFunc& operator*=(const CycScalar& c);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator*(RatFunc a, const CycScalar& c) { return a *= c; }

  friend bool operator==(const RatFunc& a, const RatFunc& b);

  RatFunc inverse() const;
  RatFunc pow(long exponent) const;

  // "num" or "(num)/(den)".
  std::string to_string(const VarNamer& names) const;

 private:
  struct Factor {
    MPoly poly;  // monic, nonconstant
    std::uint32_t mult = 0;
  };

  void cancel();
  void rebuild_den();
  // Multiplies num_ by the factors of `target` missing from this denominator
  // and adopts target as the factor list.
  void raise_to(const std::vector<Factor>& target);
  static std::vector<Factor> lcm(const std::vector<Factor>& a, const std::vector<Factor>& b);

  MPoly num_;
  std::vector<Factor> factors_;
  MPoly den_;  // product of factors_
};

// num/den with every variable substituted (denominator image must be nonzero).
RatFunc substitute(const RatFunc& f, std::span<const MPoly> images);

}  // namespace radix
