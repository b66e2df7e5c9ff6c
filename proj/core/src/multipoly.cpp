#include "radix/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "radix/error.hpp"

namespace radix {

std::uint32_t total_degree(const Exponents& e) {
  std::uint32_t d = 0;
  for (auto v : e) d += v;
  return d;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

VarNamer indexed_names(std::string prefix, std::size_t first) {
  return [prefix = std::move(prefix), first](std::size_t i) { return prefix + std::to_string(i + first); };
}

MPoly MPoly::constant(std::size_t nvars, const CycScalar& c) {
  MPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Mismatch("variable index " + std::to_string(i) + " outside " + std::to_string(nvars));
  Exponents e(nvars, 0);
  e[i] = 1;
  MPoly p(nvars);
  p.add_term(e, CycScalar(1L));
  return p;
}

MPoly MPoly::monomial(Exponents exps, const CycScalar& c) {
  MPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && radix::total_degree(terms_.begin()->first) == 0);
}

std::optional<CycScalar> MPoly::constant_value() const {
  if (terms_.empty()) return CycScalar();
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

CycScalar MPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CycScalar() : it->second;
}

const std::pair<const Exponents, CycScalar>& MPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return *terms_.begin();
}

std::uint32_t MPoly::total_degree() const {
  return terms_.empty() ? 0 : radix::total_degree(terms_.begin()->first);
}

std::uint32_t MPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::vector<bool> MPoly::occurring_vars() const {
  std::vector<bool> out(nvars_, false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) out[i] = true;
  return out;
}

std::uint32_t MPoly::coefficient_order() const {
  std::uint32_t order = 1;
  for (const auto& [e, c] : terms_) order = lcm_order(order, c.order());
  return order;
}

void MPoly::add_term(const Exponents& e, const CycScalar& c) {
  if (e.size() != nvars_) throw Mismatch("exponent vector length does not match variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  if (rhs.nvars_ != nvars_) throw Mismatch("polynomials in different variable counts");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  if (rhs.nvars_ != nvars_) throw Mismatch("polynomials in different variable counts");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw Mismatch("polynomials in different variable counts");
  MPoly out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = *this * rhs; }

MPoly& MPoly::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

MPoly MPoly::pow(std::uint32_t exponent) const {
  MPoly result = constant(nvars_, CycScalar(1L));
  MPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

MPoly MPoly::extend(std::size_t nvars) const {
  if (nvars < nvars_) throw Mismatch("cannot shrink variable count");
  MPoly out(nvars);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f.resize(nvars, 0);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

namespace {

std::string monomial_string(const Exponents& e, const VarNamer& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string MPoly::to_string(const VarNamer& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const std::string mono = monomial_string(e, names);
    std::string coeff = c.to_string();
    bool negative = false;
    if (c.is_sum()) {
      coeff = "(" + coeff + ")";
    } else if (coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (mono.empty()) {
      os << coeff;
    } else {
      if (coeff != "1") os << coeff << "*";
      os << mono;
    }
  }
  return os.str();
}

std::string MPoly::to_string() const { return to_string(indexed_names("x")); }

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

MPoly substitute(const MPoly& f, std::span<const std::optional<MPoly>> images, std::size_t target_nvars) {
  if (images.size() != f.nvars()) throw Mismatch("assignment size does not match variable count");
  const auto occurring = f.occurring_vars();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (occurring[i] && !images[i]) throw DomainError("variable " + std::to_string(i + 1) + " has no image");
    if (images[i] && images[i]->nvars() != target_nvars) throw Mismatch("substitution images disagree on variable count");
  }
  // powers[i][d] = images[i]^d, filled on demand.
  std::vector<std::vector<MPoly>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t d) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MPoly::constant(target_nvars, CycScalar(1L)));
    while (cache.size() <= d) cache.push_back(cache.back() * *images[i]);
    return cache[d];
  };
  MPoly out(target_nvars);
  for (const auto& [e, c] : f.terms()) {
    MPoly term = MPoly::constant(target_nvars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= power(i, e[i]);
    out += term;
  }
  return out;
}

MPoly substitute(const MPoly& f, std::span<const MPoly> images) {
  if (images.empty()) {
    if (f.nvars() != 0) throw Mismatch("assignment size does not match variable count");
    return f;
  }
  std::vector<std::optional<MPoly>> opt(images.begin(), images.end());
  return substitute(f, opt, images.front().nvars());
}

MPoly permute_vars(const MPoly& f, const Perm& alpha) {
  if (alpha.degree() != f.nvars())
    throw Mismatch("permutation degree " + std::to_string(alpha.degree()) + " does not match " +
                   std::to_string(f.nvars()) + " variables");
  MPoly out(f.nvars());
  Exponents moved(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    for (std::uint32_t i = 0; i < e.size(); ++i) moved[alpha(i)] = e[i];
    out.add_term(moved, c);
  }
  return out;
}

MPoly elem_sym(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw DomainError("elementary symmetric index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  MPoly out(n);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(i), true);
  do {
    Exponents e(n, 0);
    for (std::size_t v = 0; v < n; ++v) e[v] = pick[v] ? 1 : 0;
    out.add_term(e, CycScalar(1L));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

MPoly expand_elementary(const MPoly& g) {
  const std::size_t n = g.nvars();
  std::vector<MPoly> sigmas;
  for (std::size_t i = 1; i <= n; ++i) sigmas.push_back(elem_sym(n, i));
  if (n == 0) return g;
  return substitute(g, sigmas);
}

std::optional<Perm> symmetry_violation(const MPoly& f) {
  const std::size_t n = f.nvars();
  for (std::uint32_t m = 2; m <= n; ++m) {
    Perm t = Perm::transposition(n, 1, m);
    if (permute_vars(f, t) != f) return t;
  }
  return std::nullopt;
}

bool is_symmetric(const MPoly& f) { return !symmetry_violation(f).has_value(); }

bool is_even_symmetric(const MPoly& f) {
  const std::size_t n = f.nvars();
  for (std::uint32_t m = 3; m <= n; ++m)
    if (permute_vars(f, Perm::cycle(n, {1, 2, m})) != f) return false;
  return true;
}

MPoly symmetrize(const MPoly& f) {
  if (auto bad = symmetry_violation(f))
    throw NotSymmetric("polynomial is not symmetric: " + bad->to_string() + " moves it");
  const std::size_t n = f.nvars();
  MPoly g(n);
  if (f.is_zero()) return g;

  // sigma_powers[i][d] = sigma_{i+1}^d
  std::vector<std::vector<MPoly>> sigma_powers(n);
  auto sigma_power = [&](std::size_t i, std::uint32_t d) -> const MPoly& {
    auto& cache = sigma_powers[i];
    if (cache.empty()) {
      cache.push_back(MPoly::constant(n, CycScalar(1L)));
      cache.push_back(elem_sym(n, i + 1));
    }
    while (cache.size() <= d) cache.push_back(cache.back() * cache[1]);
    return cache[d];
  };

  MPoly rest = f;
  while (!rest.is_zero()) {
    const auto [lead, coeff] = rest.leading_term();
    Exponents d(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t next = i + 1 < n ? lead[i + 1] : 0;
      if (lead[i] < next) throw std::logic_error("symmetric reduction met an unsorted leading monomial");
      d[i] = lead[i] - next;
    }
    g.add_term(d, coeff);
    MPoly product = MPoly::constant(n, coeff);
    for (std::size_t i = 0; i < n; ++i)
      if (d[i] != 0) product *= sigma_power(i, d[i]);
    rest -= product;
  }
  if (expand_elementary(g) != f) throw std::logic_error("symmetrize: re-expansion does not reproduce the input");
  return g;
}

CycScalar eval(const MPoly& f, std::span<const CycScalar> point) {
  if (point.size() != f.nvars())
    throw Mismatch("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                   std::to_string(f.nvars()));
  CycScalar out;
  for (const auto& [e, c] : f.terms()) {
    CycScalar term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= point[i].pow(e[i]);
    out += term;
  }
  return out;
}

namespace {

// Root of a polynomial whose leading coefficient is 1, choosing leading
// coefficient 1 for the root; the successive terms are then forced.
std::optional<MPoly> monic_kth_root(const MPoly& f, std::uint32_t k) {
  const std::size_t n = f.nvars();
  const Exponents& lead = f.leading_term().first;
  Exponents head(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lead[i] % k != 0) return std::nullopt;
    head[i] = lead[i] / k;
  }
  MPoly root = MPoly::monomial(head, CycScalar(1L));
  const Exponents head_shift = [&] {
    Exponents s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (k - 1) * head[i];
    return s;
  }();
  Exponents last = head;
  GrlexGreater greater;
  const CycScalar inv_k = CycScalar(Rational(1, k));
  for (;;) {
    MPoly residual = f - root.pow(k);
    if (residual.is_zero()) return root;
    const auto& [mono, coeff] = residual.leading_term();
    Exponents next(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (mono[i] < head_shift[i]) return std::nullopt;
      next[i] = mono[i] - head_shift[i];
    }
    if (!greater(last, next)) return std::nullopt;
    root.add_term(next, coeff * inv_k);
    last = next;
  }
}

}  // namespace

KthRoot kth_root_poly(const MPoly& f, std::uint32_t k) {
  if (k == 0) throw DomainError("root index must be positive");
  if (f.is_zero() || k == 1) return {KthRoot::Status::Root, f};
  const CycScalar lead = f.leading_term().second;
  const MPoly normalized = f * lead.inverse();
  auto root = monic_kth_root(normalized, k);
  if (!root) return {KthRoot::Status::NoRoot, std::nullopt};
  if (auto q = lead.as_rational()) {
    if (auto r = rational_root(*q, k)) return {KthRoot::Status::Root, *root * CycScalar(*r)};
  }
  return {KthRoot::Status::Undecided, std::nullopt};
}

std::optional<MPoly> exact_divide(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (f.nvars() != g.nvars()) throw Mismatch("polynomials in different variable counts");
  const std::size_t n = f.nvars();
  const auto& [glead, gcoeff] = g.leading_term();
  const CycScalar ginv = gcoeff.inverse();
  MPoly rest = f;
  MPoly quotient(n);
  while (!rest.is_zero()) {
    const auto [mono, coeff] = rest.leading_term();
    Exponents shift(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (mono[i] < glead[i]) return std::nullopt;
      shift[i] = mono[i] - glead[i];
    }
    const CycScalar c = coeff * ginv;
    quotient.add_term(shift, c);
    rest -= MPoly::monomial(shift, c) * g;
  }
  return quotient;
}

MPoly vandermonde(std::size_t n) {
  MPoly out = MPoly::constant(n, CycScalar(1L));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out *= MPoly::variable(n, i) - MPoly::variable(n, j);
  return out;
}

}  // namespace radix
