#pragma once

// Random generators and a floating-point oracle shared by the unit tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "radix/cyclotomic.hpp"
#include "radix/multipoly.hpp"
#include "radix/perm.hpp"

namespace radix::test {

using Complex = std::complex<double>;

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(RADIX_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long bound = 9) {
    long den = integer(1, 4);
    Rational r(integer(-bound, bound), den);
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational(long bound = 9) {
    Rational r;
    do r = rational(bound);
    while (r == 0);
    return r;
  }

  CycScalar scalar(std::uint32_t order) {
    std::vector<Rational> c(euler_phi(order));
    for (auto& x : c) x = rational(5);
    return CycScalar(order, c);
  }

  CycScalar nonzero_scalar(std::uint32_t order) {
    CycScalar c;
    do c = scalar(order);
    while (c.is_zero());
    return c;
  }

  Exponents exponents(std::size_t nvars, std::uint32_t max_degree) {
    Exponents e(nvars, 0);
    auto budget = static_cast<long>(integer(0, max_degree));
    for (std::size_t i = 0; i < nvars && budget > 0; ++i) {
      auto take = static_cast<std::uint32_t>(integer(0, budget));
      e[i] = take;
      budget -= take;
    }
    std::shuffle(e.begin(), e.end(), rng_);
    return e;
  }

  // Sparse random polynomial; coefficients rational unless order > 1.
  MPoly poly(std::size_t nvars, std::uint32_t max_degree, std::size_t max_terms, std::uint32_t order = 1) {
    MPoly p(nvars);
    auto terms = integer(0, static_cast<long>(max_terms));
    for (long t = 0; t < terms; ++t) {
      CycScalar c = order == 1 ? CycScalar(rational()) : scalar(order);
      p.add_term(exponents(nvars, max_degree), c);
    }
    return p;
  }

  MPoly nonzero_poly(std::size_t nvars, std::uint32_t max_degree, std::size_t max_terms, std::uint32_t order = 1) {
    MPoly p(nvars);
    while (p.is_zero()) p = poly(nvars, max_degree, max_terms, order);
    return p;
  }

  Perm perm(std::size_t n) {
    std::vector<std::uint32_t> img(n);
    for (std::uint32_t i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng_);
    return Perm(img);
  }

  Perm even_perm(std::size_t n) {
    Perm p = perm(n);
    while (!p.is_even()) p = perm(n);
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

// Floating-point value of a cyclotomic element; the reference against which
// exact arithmetic is compared.
inline Complex approx(const CycScalar& c) {
  Complex z = 0;
  const double angle = 2 * std::numbers::pi / c.order();
  for (std::size_t i = 0; i < c.coeffs().size(); ++i)
    z += c.coeffs()[i].get_d() * std::polar(1.0, angle * static_cast<double>(i));
  return z;
}

inline Complex approx_eval(const MPoly& f, const std::vector<Complex>& point) {
  Complex total = 0;
  for (const auto& [e, c] : f.terms()) {
    Complex term = approx(c);
    for (std::size_t i = 0; i < e.size(); ++i) term *= std::pow(point[i], static_cast<int>(e[i]));
    total += term;
  }
  return total;
}

inline bool close(Complex a, Complex b, double tol = 1e-7) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

inline std::vector<Complex> random_point(Gen& g, std::size_t n) {
  std::uniform_real_distribution<double> d(-1.5, 1.5);
  std::vector<Complex> p(n);
  for (auto& z : p) z = Complex(d(g.engine()), d(g.engine()));
  return p;
}

// sigma_1..sigma_n of a numeric point, by the product prod (1 + x_i t).
inline std::vector<Complex> approx_sigmas(const std::vector<Complex>& x) {
  std::vector<Complex> e(x.size() + 1, 0);
  e[0] = 1;
  for (const auto& xi : x)
    for (std::size_t k = x.size(); k >= 1; --k) e[k] += e[k - 1] * xi;
  return {e.begin() + 1, e.end()};
}

inline MPoly x(std::size_t n, std::size_t i) { return MPoly::variable(n, i - 1); }

}  // namespace radix::test
