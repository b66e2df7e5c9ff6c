#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace radix {

using Rational = mpq_class;

// Dense univariate polynomial over the rationals, lowest degree first.
// Trailing zeros are trimmed; the zero polynomial is the empty vector.
using RationalPoly = std::vector<Rational>;

void trim(RationalPoly& p);
int degree(const RationalPoly& p);  // -1 for zero

// Quotient and remainder of a by b (b nonzero).
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);

// The N-th cyclotomic polynomial, computed as (t^N - 1) / prod_{d | N, d < N} Phi_d.
// Results are cached process-wide; the returned reference stays valid.
const RationalPoly& cyclotomic_poly(std::uint32_t order);

std::uint32_t euler_phi(std::uint32_t n);
std::uint32_t lcm_order(std::uint32_t a, std::uint32_t b);

// If q = r^k for a rational r, returns r (the positive one for even k).
std::optional<Rational> rational_root(const Rational& q, unsigned k);

std::string to_string(const Rational& q);

// Element of the cyclotomic field Q(e_N), e_N = exp(2*pi*i/N), stored in the
// power basis 1, e_N, ..., e_N^(phi(N)-1) and always reduced modulo Phi_N.
//
// Operands of different orders are lifted to the lcm of the orders before any
// arithmetic or comparison, so equality is semantic across orders.
class CycScalar {
 public:
  CycScalar();  // zero of order 1
  CycScalar(long value);  // NOLINT: implicit on purpose, integers are scalars
  CycScalar(const Rational& value);  // NOLINT
  CycScalar(std::uint32_t order, std::vector<Rational> coeffs);

  static CycScalar zero() { return CycScalar(); }
  static CycScalar one() { return CycScalar(1L); }

  std::uint32_t order() const noexcept { return order_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  std::optional<Rational> as_rational() const;

  // Same element, viewed in Q(e_target). target must be a multiple of order().
  CycScalar lift(std::uint32_t target) const;
  // The element expressed in Q(e_target) if it lies in that subfield.
  std::optional<CycScalar> restrict_to(std::uint32_t target) const;
  // Representation in the smallest Q(e_M), M | order(), containing it.
  CycScalar minimal() const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& rhs);
  CycScalar& operator-=(const CycScalar& rhs);
  CycScalar& operator*=(const CycScalar& rhs);
  CycScalar& operator/=(const CycScalar& rhs);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }

  friend bool operator==(const CycScalar& a, const CycScalar& b);

  // Multiplicative inverse via extended Euclid against Phi_N.
  CycScalar inverse() const;
  CycScalar pow(long exponent) const;

  // DSL text, e.g. "-1 - w(3)" or "1/2"; parenthesize when it is a sum.
  std::string to_string() const;
  bool is_sum() const;

 private:
  std::uint32_t order_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& c);

// e_q = e_N^(N/q) as an element of order N. Throws Mismatch if q does not divide N.
CycScalar root_of_unity(std::uint32_t q, std::uint32_t ambient);
inline CycScalar root_of_unity(std::uint32_t q) { return root_of_unity(q, q); }

// If c = e_q^m for some m in [0, q), returns m.
std::optional<std::uint32_t> root_of_unity_exponent(const CycScalar& c, std::uint32_t q);

}  // namespace radix
