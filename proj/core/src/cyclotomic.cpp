#include "radix/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "radix/error.hpp"

namespace radix {

void trim(RationalPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const RationalPoly& p) {
  for (std::size_t i = p.size(); i > 0; --i)
    if (sgn(p[i - 1]) != 0) return static_cast<int>(i - 1);
  return -1;
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  const int db = degree(b);
  if (db < 0) throw DivisionByZero("polynomial division by zero");
  RationalPoly rem = a;
  trim(rem);
  RationalPoly quot;
  if (degree(rem) >= db) quot.assign(static_cast<std::size_t>(degree(rem) - db + 1), Rational(0));
  const Rational& lead = b[static_cast<std::size_t>(db)];
  for (int dr = degree(rem); dr >= db; dr = degree(rem)) {
    Rational c = rem[static_cast<std::size_t>(dr)] / lead;
    const std::size_t shift = static_cast<std::size_t>(dr - db);
    quot[shift] = c;
    for (int j = 0; j <= db; ++j) rem[shift + static_cast<std::size_t>(j)] -= c * b[static_cast<std::size_t>(j)];
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

namespace {

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty()) return {};
  RationalPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RationalPoly poly_sub(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

struct CyclotomicCache {
  std::mutex mutex;
  std::map<std::uint32_t, std::unique_ptr<RationalPoly>> polys;
};

CyclotomicCache& cache() {
  static CyclotomicCache instance;
  return instance;
}

const RationalPoly& cyclotomic_locked(CyclotomicCache& c, std::uint32_t n) {
  if (auto it = c.polys.find(n); it != c.polys.end()) return *it->second;
  RationalPoly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = divmod(num, cyclotomic_locked(c, d)).first;
  }
  auto [it, inserted] = c.polys.emplace(n, std::make_unique<RationalPoly>(std::move(num)));
  return *it->second;
}

// In-place reduction modulo the monic polynomial phi.
void reduce_mod(std::vector<Rational>& p, const RationalPoly& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    if (sgn(p[i]) == 0) continue;
    const Rational c = p[i];
    for (std::size_t j = 0; j < d; ++j) p[i - d + j] -= c * phi[j];
    p[i] = 0;
  }
  p.resize(d, Rational(0));
}

}  // namespace

const RationalPoly& cyclotomic_poly(std::uint32_t order) {
  if (order == 0) throw DomainError("cyclotomic order must be positive");
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  return cyclotomic_locked(c, order);
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint32_t lcm_order(std::uint32_t a, std::uint32_t b) { return std::lcm(a, b); }

std::optional<Rational> rational_root(const Rational& q, unsigned k) {
  if (k == 0) return std::nullopt;
  if (k == 1) return q;
  if (sgn(q) < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = rational_root(-q, k);
    if (!r) return std::nullopt;
    return Rational(-*r);
  }
  mpz_class num_root, den_root;
  if (mpz_root(num_root.get_mpz_t(), q.get_num_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(den_root.get_mpz_t(), q.get_den_mpz_t(), k) == 0) return std::nullopt;
  Rational r(num_root, den_root);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

CycScalar::CycScalar() : order_(1), coeffs_{Rational(0)} {}

CycScalar::CycScalar(long value) : order_(1), coeffs_{Rational(value)} {}

CycScalar::CycScalar(const Rational& value) : order_(1), coeffs_{value} {}

CycScalar::CycScalar(std::uint32_t order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order_ == 0) throw DomainError("cyclotomic order must be positive");
  reduce_mod(coeffs_, cyclotomic_poly(order_));
}

bool CycScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

std::optional<Rational> CycScalar::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return std::nullopt;
  return coeffs_[0];
}

CycScalar CycScalar::lift(std::uint32_t target) const {
  if (target == order_) return *this;
  if (target % order_ != 0)
    throw Mismatch("cannot lift order " + std::to_string(order_) + " to " + std::to_string(target));
  const std::uint32_t stride = target / order_;
  std::vector<Rational> out(static_cast<std::size_t>(stride) * coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * stride] = coeffs_[i];
  return CycScalar(target, std::move(out));
}

std::optional<CycScalar> CycScalar::restrict_to(std::uint32_t target) const {
  if (target == order_) return *this;
  if (order_ % target != 0) {
    if (target % order_ == 0) return lift(target);
    return std::nullopt;
  }
  // Solve sum_i c_i * lift(e_target^i) = *this over the rationals.
  const std::size_t rows = coeffs_.size();
  const std::size_t cols = euler_phi(target);
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (std::size_t i = 0; i < cols; ++i) {
    std::vector<Rational> basis(cols, Rational(0));
    basis[i] = 1;
    const CycScalar image = CycScalar(target, std::move(basis)).lift(order_);
    for (std::size_t r = 0; r < rows; ++r) m[r][i] = image.coeffs_[r];
  }
  for (std::size_t r = 0; r < rows; ++r) m[r][cols] = coeffs_[r];

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && sgn(m[piv][col]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c <= cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (sgn(m[r][cols]) != 0) return std::nullopt;
  std::vector<Rational> out(cols, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) out[pivot_col[r]] = m[r][cols];
  return CycScalar(target, std::move(out));
}

CycScalar CycScalar::minimal() const {
  if (order_ == 1) return *this;
  if (auto q = as_rational()) return CycScalar(*q);
  for (std::uint32_t d = 2; d < order_; ++d) {
    if (order_ % d != 0) continue;
    // Q(e_d) = Q(e_2d) for odd d; prefer the odd order.
    if (auto r = restrict_to(d)) return *r;
  }
  return *this;
}

CycScalar CycScalar::operator-() const {
  CycScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycScalar& CycScalar::operator+=(const CycScalar& rhs) {
  if (rhs.order_ != order_) {
    const std::uint32_t l = lcm_order(order_, rhs.order_);
    *this = lift(l);
    return *this += rhs.lift(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& rhs) { return *this += -rhs; }

CycScalar& CycScalar::operator*=(const CycScalar& rhs) {
  if (rhs.order_ != order_) {
    if (rhs.order_ == 1) {
      for (auto& c : coeffs_) c *= rhs.coeffs_[0];
      return *this;
    }
    if (order_ == 1) {
      const Rational s = coeffs_[0];
      *this = rhs;
      for (auto& c : coeffs_) c *= s;
      return *this;
    }
    const std::uint32_t l = lcm_order(order_, rhs.order_);
    *this = lift(l);
    return *this *= rhs.lift(l);
  }
  if (order_ == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  reduce_mod(prod, cyclotomic_poly(order_));
  coeffs_ = std::move(prod);
  return *this;
}

CycScalar& CycScalar::operator/=(const CycScalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const std::uint32_t l = lcm_order(a.order_, b.order_);
  return a.lift(l).coeffs_ == b.lift(l).coeffs_;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic scalar");
  if (order_ == 1) return CycScalar(Rational(1 / coeffs_[0]));
  // Extended Euclid: track s with s * a == r (mod Phi_N).
  RationalPoly r0 = cyclotomic_poly(order_);
  RationalPoly r1 = coeffs_;
  trim(r1);
  RationalPoly s0, s1{Rational(1)};
  while (degree(r1) > 0) {
    auto [q, r] = divmod(r0, r1);
    RationalPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const Rational c = r1[0];
  for (auto& v : s1) v /= c;
  return CycScalar(order_, std::move(s1));
}

CycScalar CycScalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycScalar result(1L);
  CycScalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

bool CycScalar::is_sum() const {
  const CycScalar m = minimal();
  int nonzero = 0;
  for (const auto& c : m.coeffs_)
    if (sgn(c) != 0) ++nonzero;
  return nonzero > 1;
}

std::string CycScalar::to_string() const {
  const CycScalar m = minimal();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.coeffs_.size(); ++i) {
    const Rational& c = m.coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "w(" << m.order_ << ")";
    if (i > 1) os << "^" << i;
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycScalar& c) { return os << c.to_string(); }

CycScalar root_of_unity(std::uint32_t q, std::uint32_t ambient) {
  if (q == 0 || ambient == 0 || ambient % q != 0)
    throw Mismatch("root of unity order " + std::to_string(q) + " does not divide " + std::to_string(ambient));
  const std::uint32_t e = ambient / q;
  std::vector<Rational> coeffs(static_cast<std::size_t>(e) + 1, Rational(0));
  coeffs[e] = 1;
  return CycScalar(ambient, std::move(coeffs));
}

std::optional<std::uint32_t> root_of_unity_exponent(const CycScalar& c, std::uint32_t q) {
  const CycScalar e = root_of_unity(q);
  CycScalar power(1L);
  for (std::uint32_t m = 0; m < q; ++m) {
    if (power == c) return m;
    power *= e;
  }
  return std::nullopt;
}

}  // namespace radix
