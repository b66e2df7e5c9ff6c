#include "radix/tower.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "radix/error.hpp"
#include "radix/permchar.hpp"

namespace radix {

TowerElem::TowerElem(std::size_t level, std::vector<TowerElem> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
  if (level_ == 0) throw DomainError("level-0 tower elements hold a rational function");
  for (const auto& c : coeffs_)
    if (c.level() != level_ - 1) throw Mismatch("tower coordinates must live one level down");
}

std::string to_string(Attestation a) {
  switch (a) {
    case Attestation::Unknown: return "unknown";
    case Attestation::Asserted: return "asserted";
    case Attestation::Verified: return "verified";
  }
  return "unknown";
}

namespace {

std::uint32_t elem_order(const TowerElem& e) {
  if (e.level() == 0) return lcm_order(e.base().num().coefficient_order(), e.base().den().coefficient_order());
  std::uint32_t order = 1;
  for (const auto& c : e.coeffs()) order = lcm_order(order, elem_order(c));
  return order;
}

}  // namespace

Tower::Tower(TowerSpec spec) : spec_(std::move(spec)) {
  if (spec_.n == 0) throw DomainError("tower over zero variables");
  const std::size_t s = spec_.ks.size();
  if (spec_.ps.size() != s) throw Mismatch("tower needs one p per radical level");
  if (spec_.attestations.empty()) spec_.attestations.assign(s, Attestation::Unknown);
  if (spec_.attestations.size() != s) throw Mismatch("tower needs one attestation per level");
  for (std::size_t j = 0; j < s; ++j) {
    if (!is_prime(spec_.ks[j]))
      throw DomainError("radical exponent k_" + std::to_string(j + 1) + " = " + std::to_string(spec_.ks[j]) +
                        " is not prime");
    if (spec_.ps[j].level() != j)
      throw Mismatch("p_" + std::to_string(j) + " must live at level " + std::to_string(j));
    ambient_ = lcm_order(ambient_, spec_.ks[j]);
    ambient_ = lcm_order(ambient_, elem_order(spec_.ps[j]));
  }
  for (std::size_t i = 1; i <= spec_.n; ++i) sigma_images_.push_back(elem_sym(spec_.n, i));
}

Tower Tower::with_attestation(std::size_t level, Attestation a) const {
  TowerSpec spec = spec_;
  spec.attestations.at(level - 1) = a;
  return Tower(std::move(spec));
}

Tower Tower::extended(std::uint32_t k, TowerElem p, Attestation a) const {
  TowerSpec spec = spec_;
  spec.ks.push_back(k);
  spec.ps.push_back(lift(p, height()));
  spec.attestations.push_back(a);
  return Tower(std::move(spec));
}

TowerElem Tower::zero(std::size_t level) const {
  if (level == 0) return TowerElem(RatFunc(spec_.n));
  return TowerElem(level, std::vector<TowerElem>(k(level), zero(level - 1)));
}

TowerElem Tower::one(std::size_t level) const { return from_scalar(CycScalar(1L), level); }

TowerElem Tower::from_base(const RatFunc& f, std::size_t level) const {
  if (f.nvars() != spec_.n) throw Mismatch("base element must be a function of sigma_1..sigma_n");
  return lift(TowerElem(f), level);
}

TowerElem Tower::from_scalar(const CycScalar& c, std::size_t level) const {
  return from_base(RatFunc::constant(spec_.n, c), level);
}

TowerElem Tower::sigma(std::size_t i) const { return TowerElem(RatFunc(MPoly::variable(spec_.n, i - 1))); }

TowerElem Tower::generator(std::size_t level) const {
  if (level == 0 || level > height()) throw DomainError("no generator y_" + std::to_string(level));
  std::vector<TowerElem> coeffs(k(level), zero(level - 1));
  coeffs[1] = one(level - 1);
  return TowerElem(level, std::move(coeffs));
}

TowerElem Tower::lift(const TowerElem& e, std::size_t level) const {
  if (e.level() == level) return e;
  if (e.level() > level) throw Mismatch("cannot lift an element down");
  if (level > height()) throw Mismatch("level " + std::to_string(level) + " beyond tower height");
  std::vector<TowerElem> coeffs(k(level), zero(level - 1));
  coeffs[0] = lift(e, level - 1);
  return TowerElem(level, std::move(coeffs));
}

TowerElem Tower::lower(const TowerElem& e) const {
  if (e.level() == 0) return e;
  for (std::size_t i = 1; i < e.coeffs().size(); ++i)
    if (!is_zero(e.coeffs()[i])) return e;
  return lower(e.coeffs()[0]);
}

bool Tower::is_zero(const TowerElem& e) const {
  if (e.level() == 0) return e.base().is_zero();
  return std::all_of(e.coeffs().begin(), e.coeffs().end(), [&](const TowerElem& c) { return is_zero(c); });
}

std::pair<TowerElem, TowerElem> Tower::at_common_level(const TowerElem& a, const TowerElem& b) const {
  const std::size_t level = std::max(a.level(), b.level());
  return {lift(a, level), lift(b, level)};
}

bool Tower::equal(const TowerElem& a, const TowerElem& b) const {
  if (a.level() != b.level()) {
    auto [x, y] = at_common_level(a, b);
    return equal(x, y);
  }
  if (a.level() == 0) return a.base() == b.base();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    if (!equal(a.coeffs()[i], b.coeffs()[i])) return false;
  return true;
}

TowerElem Tower::add_same(const TowerElem& a, const TowerElem& b) const {
  if (a.level() == 0) return TowerElem(a.base() + b.base());
  std::vector<TowerElem> coeffs;
  coeffs.reserve(a.coeffs().size());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) coeffs.push_back(add_same(a.coeffs()[i], b.coeffs()[i]));
  return TowerElem(a.level(), std::move(coeffs));
}

TowerElem Tower::add(const TowerElem& a, const TowerElem& b) const {
  if (a.level() == b.level()) return add_same(a, b);
  auto [x, y] = at_common_level(a, b);
  return add_same(x, y);
}

TowerElem Tower::neg(const TowerElem& a) const {
  if (a.level() == 0) return TowerElem(-a.base());
  std::vector<TowerElem> coeffs;
  for (const auto& c : a.coeffs()) coeffs.push_back(neg(c));
  return TowerElem(a.level(), std::move(coeffs));
}

TowerElem Tower::sub(const TowerElem& a, const TowerElem& b) const { return add(a, neg(b)); }

TowerElem Tower::mul_same(const TowerElem& a, const TowerElem& b) const {
  const std::size_t level = a.level();
  if (level == 0) return TowerElem(a.base() * b.base());
  const std::size_t kk = k(level);
  std::vector<TowerElem> prod(2 * kk - 1, zero(level - 1));
  std::vector<bool> a_nonzero(kk), b_nonzero(kk);
  for (std::size_t i = 0; i < kk; ++i) {
    a_nonzero[i] = !is_zero(a.coeffs()[i]);
    b_nonzero[i] = !is_zero(b.coeffs()[i]);
  }
  for (std::size_t i = 0; i < kk; ++i) {
    if (!a_nonzero[i]) continue;
    for (std::size_t l = 0; l < kk; ++l) {
      if (!b_nonzero[l]) continue;
      prod[i + l] = add_same(prod[i + l], mul_same(a.coeffs()[i], b.coeffs()[l]));
    }
  }
  // y^k = p_{level-1}
  const TowerElem& rho = p(level - 1);
  for (std::size_t idx = 2 * kk - 2; idx >= kk; --idx) {
    if (is_zero(prod[idx])) continue;
    prod[idx - kk] = add_same(prod[idx - kk], mul_same(prod[idx], rho));
  }
  prod.resize(kk);
  return TowerElem(level, std::move(prod));
}

TowerElem Tower::mul(const TowerElem& a, const TowerElem& b) const {
  if (a.level() == b.level()) return mul_same(a, b);
  const TowerElem& low = a.level() < b.level() ? a : b;
  const TowerElem& high = a.level() < b.level() ? b : a;
  std::vector<TowerElem> coeffs;
  coeffs.reserve(high.coeffs().size());
  for (const auto& c : high.coeffs()) coeffs.push_back(mul(low, c));
  return TowerElem(high.level(), std::move(coeffs));
}

TowerElem Tower::scale(const TowerElem& a, const CycScalar& c) const {
  if (a.level() == 0) return TowerElem(a.base() * c);
  std::vector<TowerElem> coeffs;
  for (const auto& x : a.coeffs()) coeffs.push_back(scale(x, c));
  return TowerElem(a.level(), std::move(coeffs));
}

TowerElem Tower::pow(const TowerElem& a, long exponent) const {
  if (exponent < 0) return pow(inverse(a), -exponent);
  TowerElem result = one(a.level());
  TowerElem base = a;
  while (exponent > 0) {
    if (exponent & 1) result = mul_same(result, base);
    exponent >>= 1;
    if (exponent) base = mul_same(base, base);
  }
  return result;
}

TowerElem Tower::inverse(const TowerElem& u) const {
  if (is_zero(u)) throw DivisionByZero("inverse of zero tower element");
  if (u.level() == 0) return TowerElem(u.base().inverse());
  const TowerElem low = lower(u);
  if (low.level() < u.level()) return lift(inverse(low), u.level());

  const std::size_t level = u.level();
  if (attestation(level) == Attestation::Unknown)
    throw AttestationError("level " + std::to_string(level) +
                           " has no nonpower attestation; y^k - p may be reducible");
  // u times its nontrivial conjugates is the norm, which lies one level down.
  // Only multiplication is needed, so no denominators build up as they would
  // in a gcd-free Euclid over rational functions.
  const std::uint32_t kk = k(level);
  TowerElem cofactor = one(level);
  for (std::uint32_t m = 1; m < kk; ++m) cofactor = mul_same(cofactor, conjugate(u, level, m));
  const TowerElem norm = lower(mul_same(u, cofactor));
  if (norm.level() == level) throw std::logic_error("norm did not descend a level");
  if (is_zero(norm))
    throw AttestationError("y_" + std::to_string(level) + "^" + std::to_string(kk) + " - p_" +
                           std::to_string(level - 1) + " has a zero divisor; p_" + std::to_string(level - 1) +
                           " is a power after all");
  return mul(cofactor, inverse(norm));
}

TowerElem Tower::conjugate(const TowerElem& e, std::size_t level, std::uint32_t power) const {
  if (level == 0 || level > height()) throw DomainError("no generator y_" + std::to_string(level) + " to conjugate");
  if (e.level() < level) return e;
  const std::uint32_t kk = k(level);
  power %= kk;
  if (power == 0) return e;
  if (e.level() == level) {
    const CycScalar eps = root_of_unity(kk);
    std::vector<TowerElem> coeffs;
    for (std::size_t i = 0; i < e.coeffs().size(); ++i)
      coeffs.push_back(scale(e.coeffs()[i], eps.pow(static_cast<long>((power * i) % kk))));
    return TowerElem(level, std::move(coeffs));
  }
  for (std::size_t m = level; m < e.level(); ++m) {
    if (!equal(conjugate(p(m), level, power), p(m)))
      throw DomainError("conjugation of y_" + std::to_string(level) + " moves p_" + std::to_string(m) +
                        "; it does not extend to level " + std::to_string(e.level()));
  }
  std::vector<TowerElem> coeffs;
  for (const auto& c : e.coeffs()) coeffs.push_back(conjugate(c, level, power));
  return TowerElem(e.level(), std::move(coeffs));
}

std::vector<std::pair<Exponents, RatFunc>> Tower::flatten(const TowerElem& e) const {
  std::vector<std::pair<Exponents, RatFunc>> out;
  if (e.level() == 0) {
    if (!e.base().is_zero()) out.emplace_back(Exponents{}, e.base());
    return out;
  }
  for (std::size_t i = 0; i < e.coeffs().size(); ++i) {
    for (auto& [ex, rf] : flatten(e.coeffs()[i])) {
      Exponents full = ex;
      full.resize(e.level(), 0);
      full[e.level() - 1] = static_cast<std::uint32_t>(i);
      out.emplace_back(std::move(full), std::move(rf));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return GrlexGreater{}(a.first, b.first); });
  return out;
}

RatFunc Tower::embed(const TowerElem& e, std::span<const std::optional<MPoly>> witnesses) const {
  if (e.level() == 0) return substitute(e.base(), sigma_images_);
  const std::size_t level = e.level();
  if (witnesses.size() < level || !witnesses[level - 1])
    throw DomainError("no witness for y_" + std::to_string(level));
  const RatFunc w(*witnesses[level - 1]);
  RatFunc out = embed(e.coeffs().back(), witnesses);
  for (std::size_t i = e.coeffs().size() - 1; i-- > 0;) {
    out *= w;
    out += embed(e.coeffs()[i], witnesses);
  }
  return out;
}

std::string Tower::to_string(const TowerElem& e) const {
  const auto terms = flatten(e);
  if (terms.empty()) return "0";
  const VarNamer snames = indexed_names("s");
  std::string out;
  for (const auto& [ex, rf] : terms) {
    std::string mono;
    for (std::size_t m = 0; m < ex.size(); ++m) {
      if (ex[m] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "y" + std::to_string(m + 1);
      if (ex[m] > 1) mono += "^" + std::to_string(ex[m]);
    }
    std::string coeff;
    bool negative = false;
    if (rf.is_polynomial()) {
      coeff = rf.num().to_string(snames);
      if (rf.num().size() == 1) {
        if (coeff.front() == '-') {
          negative = true;
          coeff.erase(0, 1);
        }
        if (coeff.front() == '(' && !mono.empty()) coeff = "(" + coeff + ")";
      } else if (!mono.empty()) {
        coeff = "(" + coeff + ")";
      }
    } else {
      coeff = rf.to_string(snames);
    }
    std::string term;
    if (mono.empty())
      term = coeff;
    else if (coeff == "1")
      term = mono;
    else
      term = coeff + "*" + mono;
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

TowerElem Tower::from_poly(const MPoly& f, std::size_t level) const {
  const std::size_t n = spec_.n;
  if (f.nvars() != n + level)
    throw Mismatch("expected a polynomial in " + std::to_string(n + level) + " variables, got " +
                   std::to_string(f.nvars()));
  std::map<Exponents, MPoly, GrlexGreater> groups;
  for (const auto& [e, c] : f.terms()) {
    Exponents yexp(e.begin() + static_cast<std::ptrdiff_t>(n), e.end());
    Exponents sexp(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n));
    auto [it, inserted] = groups.try_emplace(yexp, MPoly(n));
    it->second.add_term(sexp, c);
  }
  TowerElem out = zero(level);
  for (const auto& [yexp, spoly] : groups) {
    TowerElem term = from_base(RatFunc(spoly), 0);
    for (std::size_t m = 0; m < level; ++m)
      if (yexp[m] != 0) term = mul(term, pow(generator(m + 1), yexp[m]));
    out = add(out, term);
  }
  return out;
}

TowerElem Tower::from_ratfunc(const RatFunc& f, std::size_t level) const {
  const TowerElem num = from_poly(f.num(), level);
  const TowerElem den = lower(from_poly(f.den(), level));
  return lift(mul(num, inverse(den)), level);
}

TowerPoly Tower::poly_trim(TowerPoly p) const {
  while (!p.coeffs.empty() && is_zero(p.coeffs.back())) p.coeffs.pop_back();
  return p;
}

int Tower::poly_degree(const TowerPoly& p) const {
  for (std::size_t i = p.coeffs.size(); i > 0; --i)
    if (!is_zero(p.coeffs[i - 1])) return static_cast<int>(i - 1);
  return -1;
}

TowerPoly Tower::poly_add(const TowerPoly& a, const TowerPoly& b) const {
  const std::size_t level = std::max(a.level, b.level);
  TowerPoly out{level, std::vector<TowerElem>(std::max(a.coeffs.size(), b.coeffs.size()), zero(level))};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] = add(out.coeffs[i], a.coeffs[i]);
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] = add(out.coeffs[i], b.coeffs[i]);
  return poly_trim(std::move(out));
}

TowerPoly Tower::poly_sub(const TowerPoly& a, const TowerPoly& b) const {
  TowerPoly nb{b.level, {}};
  for (const auto& c : b.coeffs) nb.coeffs.push_back(neg(c));
  return poly_add(a, nb);
}

TowerPoly Tower::poly_mul(const TowerPoly& a, const TowerPoly& b) const {
  const std::size_t level = std::max(a.level, b.level);
  if (a.coeffs.empty() || b.coeffs.empty()) return {level, {}};
  TowerPoly out{level, std::vector<TowerElem>(a.coeffs.size() + b.coeffs.size() - 1, zero(level))};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (is_zero(a.coeffs[i])) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      out.coeffs[i + j] = add(out.coeffs[i + j], mul(a.coeffs[i], b.coeffs[j]));
  }
  return poly_trim(std::move(out));
}

std::pair<TowerPoly, TowerPoly> Tower::poly_divmod(const TowerPoly& a, const TowerPoly& b) const {
  const int db = poly_degree(b);
  if (db < 0) throw DivisionByZero("division by the zero polynomial");
  const std::size_t level = std::max(a.level, b.level);
  TowerPoly rem = poly_trim(a);
  rem.level = level;
  TowerPoly quot{level, {}};
  const TowerElem lead_inv = inverse(b.coeffs[static_cast<std::size_t>(db)]);
  for (int dr = poly_degree(rem); dr >= db; dr = poly_degree(rem)) {
    const TowerElem c = mul(rem.coeffs[static_cast<std::size_t>(dr)], lead_inv);
    const std::size_t shift = static_cast<std::size_t>(dr - db);
    if (quot.coeffs.size() <= shift) quot.coeffs.resize(shift + 1, zero(level));
    quot.coeffs[shift] = lift(c, level);
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem.coeffs[shift + static_cast<std::size_t>(j)];
      slot = sub(slot, mul(c, b.coeffs[static_cast<std::size_t>(j)]));
    }
    rem.coeffs[static_cast<std::size_t>(dr)] = zero(level);
    rem = poly_trim(std::move(rem));
  }
  return {poly_trim(std::move(quot)), rem};
}

TowerElem Tower::poly_eval(const TowerPoly& p, const TowerElem& x) const {
  const std::size_t level = std::max(p.level, x.level());
  TowerElem out = zero(level);
  for (std::size_t i = p.coeffs.size(); i-- > 0;) out = add(mul(out, x), p.coeffs[i]);
  return lift(out, level);
}

NonpowerResult nonpower_check(const Tower& tower, std::size_t level) {
  if (level == 0 || level > tower.height()) throw DomainError("no level " + std::to_string(level) + " in tower");
  const std::uint32_t k = tower.k(level);
  const TowerElem& rho = tower.p(level - 1);
  if (level == 1) {
    const RatFunc& f = rho.base();
    const MPoly target = f.num() * f.den().pow(k - 1);
    const KthRoot r = kth_root_poly(target, k);
    switch (r.status) {
      case KthRoot::Status::NoRoot: return {NonpowerResult::Verdict::Verified, std::nullopt};
      case KthRoot::Status::Undecided: return {NonpowerResult::Verdict::Undecided, std::nullopt};
      case KthRoot::Status::Root:
        return {NonpowerResult::Verdict::Refuted, TowerElem(RatFunc(*r.root, f.den()))};
    }
  }
  std::vector<TowerElem> candidates;
  for (std::size_t m = 1; m < level; ++m) candidates.push_back(tower.generator(m));
  for (std::size_t m = 0; m + 1 < level; ++m) candidates.push_back(tower.p(m));
  for (const auto& c : candidates)
    if (tower.equal(tower.pow(c, k), rho)) return {NonpowerResult::Verdict::Refuted, c};
  return {NonpowerResult::Verdict::Undecided, std::nullopt};
}

Tower attest_levels(const Tower& tower, std::optional<std::size_t>* refuted) {
  TowerSpec spec = tower.spec();
  for (std::size_t level = 1; level <= tower.height(); ++level) {
    const auto r = nonpower_check(tower, level);
    if (r.verdict == NonpowerResult::Verdict::Verified) spec.attestations[level - 1] = Attestation::Verified;
    if (r.verdict == NonpowerResult::Verdict::Refuted && refuted && !*refuted) *refuted = level;
  }
  return Tower(std::move(spec));
}

bool AnnihilationReport::consistent() const {
  if (conjugate_roots.empty()) return false;
  if (remainder_zero) return std::all_of(conjugate_roots.begin(), conjugate_roots.end(), [](bool b) { return b; });
  return !conjugate_roots.front();
}

AnnihilationReport check_annihilation(const Tower& tower, const TowerPoly& q, std::size_t level) {
  if (level == 0 || level > tower.height()) throw DomainError("no level " + std::to_string(level) + " in tower");
  if (q.level >= level)
    throw DomainError("Q must have coefficients in F_" + std::to_string(level - 1) + ", got level " +
                      std::to_string(q.level));
  for (const auto& c : q.coeffs)
    if (c.level() >= level) throw DomainError("Q has a coefficient above level " + std::to_string(level - 1));
  const std::size_t below = level - 1;
  const std::uint32_t k = tower.k(level);
  TowerPoly lifted{below, {}};
  for (const auto& c : q.coeffs) lifted.coeffs.push_back(tower.lift(c, below));
  TowerPoly modulus{below, std::vector<TowerElem>(k + 1, tower.zero(below))};
  modulus.coeffs[0] = tower.neg(tower.p(below));
  modulus.coeffs[k] = tower.one(below);

  AnnihilationReport report;
  report.level = level;
  report.remainder = tower.poly_divmod(lifted, modulus).second;
  report.remainder_zero = tower.poly_degree(report.remainder) < 0;
  const CycScalar eps = root_of_unity(k);
  const TowerElem y = tower.generator(level);
  for (std::uint32_t j = 0; j < k; ++j) {
    const TowerElem root = tower.scale(y, eps.pow(j));
    report.conjugate_roots.push_back(tower.is_zero(tower.poly_eval(lifted, root)));
  }
  return report;
}

std::optional<std::size_t> WitnessReport::first_failure_level() const {
  auto idx = first_failure(checks);
  if (!idx) return std::nullopt;
  return *idx + 1;
}

WitnessReport witness_check(const Tower& tower, std::span<const std::optional<MPoly>> witnesses) {
  WitnessReport report;
  const VarNamer xnames = indexed_names("x");
  for (std::size_t level = 1; level <= tower.height(); ++level) {
    const std::string label =
        "level " + std::to_string(level) + ": y" + std::to_string(level) + "^" + std::to_string(tower.k(level)) +
        " = p" + std::to_string(level - 1);
    if (witnesses.size() < level || !witnesses[level - 1]) {
      report.checks.push_back({label, false, "no witness for y" + std::to_string(level)});
      continue;
    }
    try {
      const MPoly lhs = witnesses[level - 1]->pow(tower.k(level));
      const RatFunc rhs = tower.embed(tower.p(level - 1), witnesses);
      const bool pass = rhs.num() == lhs * rhs.den();
      std::string detail;
      if (!pass) {
        const RatFunc diff = rhs - RatFunc(lhs);
        if (auto poly = diff.as_polynomial())
          detail = "difference leading term " +
                   MPoly::monomial(poly->leading_term().first, poly->leading_term().second).to_string(xnames);
        else
          detail = "difference " + diff.to_string(xnames);
      }
      report.checks.push_back({label, pass, detail});
    } catch (const Error& e) {
      report.checks.push_back({label, false, e.what()});
    }
  }
  return report;
}

}  // namespace radix
