#include "radix/resolvent.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "radix/error.hpp"

namespace radix {

namespace {

// y'^e for the generator of `level`, using y'^k = p to avoid inverting y'.
TowerElem generator_power(const Tower& tower, std::size_t level, long e) {
  const long k = tower.k(level);
  const long r = ((e % k) + k) % k;
  const long t = (e - r) / k;
  TowerElem out = tower.pow(tower.generator(level), r);
  if (t != 0) out = tower.mul(out, tower.pow(tower.p(level - 1), t));
  return out;
}

RatFunc eval_embedded(const std::vector<RatFunc>& coeffs, const MPoly& z) {
  RatFunc out(z.nvars());
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    out *= RatFunc(z);
    out += coeffs[i];
  }
  return out;
}

bool lower_witnesses_present(const FormalRadicalFormula& f, std::size_t below) {
  for (std::size_t m = 0; m < below; ++m)
    if (m >= f.witnesses.size() || !f.witnesses[m]) return false;
  return true;
}

}  // namespace

std::pair<long, long> bezout_min_b(std::uint32_t k, std::uint32_t l) {
  if (std::gcd(k, l) != 1) throw DomainError("l = " + std::to_string(l) + " is not invertible modulo " + std::to_string(k));
  const long kk = k;
  const long ll = l % k;
  long inv = 0;
  for (long c = 0; c < kk; ++c)
    if ((c * ll) % kk == 1 % kk) {
      inv = c;
      break;
    }
  const long b = 2 * inv > kk ? inv - kk : inv;
  const long num = 1 - b * static_cast<long>(l);
  return {num / kk, b};
}

LastRadicalData extract_last_radical(const Tower& tower, const TowerElem& e, std::size_t level) {
  if (level == 0 || level > tower.height()) throw DomainError("no level " + std::to_string(level) + " in tower");
  const TowerElem E = tower.lift(e, level);
  LastRadicalData d;
  d.level = level;
  d.k = tower.k(level);
  for (std::uint32_t i = 1; i < d.k; ++i)
    if (!tower.is_zero(E.coeffs()[i])) {
      d.l = i;
      break;
    }
  if (d.l == 0)
    throw DomainError("the element has no y" + std::to_string(level) + " term; it lies in F_" +
                      std::to_string(level - 1) + ", so level " + std::to_string(level) + " can be dropped");
  d.u = E.coeffs()[d.l];
  std::tie(d.a, d.b) = bezout_min_b(d.k, d.l);
  const std::size_t below = level - 1;
  const TowerElem& p = tower.p(below);
  d.z_power = tower.mul(tower.pow(d.u, d.k), tower.pow(p, d.l));
  // y = p^a u^-b z^b and z^k = z_power.
  const TowerElem unit = tower.mul(tower.pow(p, d.a), tower.pow(d.u, -d.b));
  d.q = TowerPoly{below, std::vector<TowerElem>(d.k, tower.zero(below))};
  for (std::uint32_t i = 0; i < d.k; ++i) {
    const TowerElem& c = E.coeffs()[i];
    if (tower.is_zero(c)) continue;
    const long bi = d.b * static_cast<long>(i);
    const long ei = ((bi % d.k) + d.k) % d.k;
    const long t = (bi - ei) / static_cast<long>(d.k);
    TowerElem term = tower.mul(c, tower.pow(unit, i));
    if (t != 0) term = tower.mul(term, tower.pow(d.z_power, t));
    d.q.coeffs[ei] = tower.add(d.q.coeffs[ei], term);
  }
  if (!tower.equal(d.q.coeffs[1], tower.one(below)))
    throw std::logic_error("degree-1 coefficient of q is " + tower.to_string(d.q.coeffs[1]) + ", not 1");
  return d;
}

LastRadicalData extract_last_radical(const FormalRadicalFormula& f) {
  if (f.s() == 0) throw DomainError("a formula without radicals has no last radical");
  return extract_last_radical(f.tower, f.target, f.s());
}

TowerPoly resolvent_average_symbolic(const Tower& tower, const TowerPoly& q, std::uint32_t k) {
  const CycScalar eps = root_of_unity(k);
  TowerPoly sum{q.level, {}};
  for (std::uint32_t j = 0; j < k; ++j) {
    TowerPoly conj{q.level, {}};
    for (std::size_t i = 0; i < q.coeffs.size(); ++i)
      conj.coeffs.push_back(tower.scale(q.coeffs[i], eps.pow(static_cast<long>(i * j))));
    for (auto& c : conj.coeffs) c = tower.scale(c, eps.pow(-static_cast<long>(j)));
    sum = tower.poly_add(sum, conj);
  }
  for (auto& c : sum.coeffs) c = tower.scale(c, CycScalar(Rational(1, k)));
  return tower.poly_trim(sum);
}

bool is_pure_z(const Tower& tower, const TowerPoly& p) {
  const TowerPoly t = tower.poly_trim(p);
  return t.coeffs.size() == 2 && tower.is_zero(t.coeffs[0]) && tower.equal(t.coeffs[1], tower.one(t.coeffs[1].level()));
}

std::vector<RatFunc> conjugate_values(const LastRadicalData& d, const FormalRadicalFormula& f, const MPoly& z) {
  std::vector<RatFunc> coeffs;
  for (const auto& c : d.q.coeffs) coeffs.push_back(f.tower.embed(c, f.witnesses));
  const CycScalar eps = root_of_unity(d.k);
  std::vector<RatFunc> out;
  for (std::uint32_t j = 0; j < d.k; ++j) out.push_back(eval_embedded(coeffs, z * eps.pow(j)));
  return out;
}

ResolventAverage resolvent_average(const LastRadicalData& d, const FormalRadicalFormula& f,
                                   const std::vector<MPoly>& values) {
  if (values.size() != d.k) throw Mismatch("expected one conjugate value per power of the root of unity");
  const std::size_t n = f.n();
  const CycScalar eps = root_of_unity(d.k);
  MPoly avg(n);
  for (std::uint32_t j = 0; j < d.k; ++j) avg += values[j] * eps.pow(-static_cast<long>(j));
  avg *= CycScalar(Rational(1, d.k));

  ResolventAverage out;
  out.value = avg;
  const std::string lvl = std::to_string(d.level);
  if (!lower_witnesses_present(f, d.level - 1)) {
    out.checks.push_back({"average at level " + lvl, false, "witnesses below the level are missing"});
    return out;
  }
  const RatFunc zk = f.tower.embed(d.z_power, f.witnesses);
  out.checks.push_back({"z^" + std::to_string(d.k) + " = u^k p" + std::to_string(d.level - 1) + "^l",
                        zk.num() == avg.pow(d.k) * zk.den(), ""});
  const auto conj = conjugate_values(d, f, avg);
  bool all = true;
  for (std::uint32_t j = 0; j < d.k; ++j) all = all && conj[j] == RatFunc(values[j]);
  out.checks.push_back({"q(e^j z) = r_j for j = 0.." + std::to_string(d.k - 1), all, ""});
  if (d.level - 1 < f.witnesses.size() && f.witnesses[d.level - 1]) {
    const RatFunc expected = f.tower.embed(d.u, f.witnesses) * RatFunc(f.witnesses[d.level - 1]->pow(d.l));
    out.checks.push_back({"z = u * witness" + lvl + "^" + std::to_string(d.l), expected == RatFunc(avg), ""});
  }
  return out;
}

std::optional<ResolventAverage> derive_z_witness(const LastRadicalData& d, const FormalRadicalFormula& f,
                                                 const MPoly& embedded_e) {
  const std::size_t n = f.n();
  if (n > 6) throw DomainError("witness derivation enumerates S_n and is capped at n = 6");
  if (!lower_witnesses_present(f, d.level - 1)) return std::nullopt;
  std::vector<MPoly> orbit{embedded_e};
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0U);
  do {
    MPoly g = permute_vars(embedded_e, Perm(images));
    if (std::find(orbit.begin(), orbit.end(), g) == orbit.end()) orbit.push_back(std::move(g));
  } while (std::next_permutation(images.begin(), images.end()));

  const std::size_t m = orbit.size();
  std::size_t total = 1;
  for (std::uint32_t j = 1; j < d.k; ++j) {
    total *= m;
    if (total > 200000) throw DomainError("orbit search exceeds 200000 assignments");
  }
  std::vector<std::size_t> pick(d.k - 1, 0);
  for (std::size_t count = 0; count < total; ++count) {
    std::size_t c = count;
    for (auto& p : pick) {
      p = c % m;
      c /= m;
    }
    std::vector<MPoly> values{embedded_e};
    for (auto p : pick) values.push_back(orbit[p]);
    ResolventAverage r = resolvent_average(d, f, values);
    if (!r.value.is_zero() && r.valid()) return r;
  }
  return std::nullopt;
}

std::string ResolventPolynomial::to_string() const {
  const VarNamer names = indexed_names("s");
  std::string out;
  for (std::size_t i = sigma_coeffs.size(); i-- > 0;) {
    const MPoly& c = sigma_coeffs[i];
    if (c.is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
    std::string coeff = c.to_string(names);
    std::string term;
    if (mono.empty())
      term = c.size() > 1 ? "(" + coeff + ")" : coeff;
    else if (coeff == "1")
      term = mono;
    else if (coeff == "-1")
      term = "-" + mono;
    else
      term = (c.size() > 1 || c.leading_term().second.is_sum() ? "(" + coeff + ")" : coeff) + "*" + mono;
    if (out.empty())
      out = term;
    else if (term.front() == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

ResolventPolynomial build_R(const MPoly& f, std::size_t n) {
  if (n > 4) throw DomainError("build_R expands n! factors and is capped at n = 4");
  if (f.nvars() != n) throw Mismatch("f must be a polynomial in x1..x" + std::to_string(n));
  ResolventPolynomial out;
  out.n = n;
  out.x_coeffs = {MPoly::constant(n, CycScalar(1L))};
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0U);
  do {
    const MPoly g = permute_vars(f, Perm(images));
    std::vector<MPoly> next(out.x_coeffs.size() + 1, MPoly(n));
    for (std::size_t i = 0; i < out.x_coeffs.size(); ++i) {
      next[i + 1] += out.x_coeffs[i];
      next[i] -= out.x_coeffs[i] * g;
    }
    out.x_coeffs = std::move(next);
  } while (std::next_permutation(images.begin(), images.end()));
  out.coefficients_symmetric =
      std::all_of(out.x_coeffs.begin(), out.x_coeffs.end(), [](const MPoly& c) { return is_symmetric(c); });
  if (!out.coefficients_symmetric) throw std::logic_error("R has a coefficient that is not symmetric");
  for (const auto& c : out.x_coeffs) out.sigma_coeffs.push_back(symmetrize(c));
  return out;
}

AbelStep abel_step(const FormalRadicalFormula& f, std::size_t level) {
  const Tower& tower = f.tower;
  const std::size_t s = f.s();
  if (level == 0 || level > s) throw DomainError("no level " + std::to_string(level) + " to rewrite");
  AbelStep step;
  step.level = level;
  const TowerElem E = tower.lift(level == s ? f.target : tower.p(level), level);
  const auto& old_witness = level - 1 < f.witnesses.size() ? f.witnesses[level - 1] : std::optional<MPoly>{};

  bool has_term = false;
  for (std::uint32_t i = 1; i < tower.k(level); ++i) has_term = has_term || !tower.is_zero(E.coeffs()[i]);
  if (!has_term) {
    if (!old_witness)
      throw DomainError("level " + std::to_string(level) + ": the element above has no y" + std::to_string(level) +
                        " term and y" + std::to_string(level) + " has no witness; the level can be dropped");
    step.skipped = true;
    step.note = "no y" + std::to_string(level) + " term above; the existing witness is kept";
    step.result = f;
    return step;
  }

  LastRadicalData d = extract_last_radical(tower, E, level);
  step.symbolic_telescoping = is_pure_z(tower, resolvent_average_symbolic(tower, d.q, d.k));
  if (!step.symbolic_telescoping) throw std::logic_error("resolvent average does not telescope to z");

  if (old_witness) {
    if (!lower_witnesses_present(f, level - 1))
      throw DomainError("level " + std::to_string(level) + ": witnesses below are needed to embed u");
    const RatFunc z = tower.embed(d.u, f.witnesses) * RatFunc(old_witness->pow(d.l));
    auto zp = z.as_polynomial();
    if (!zp) throw DomainError("u * witness^l is not a polynomial at level " + std::to_string(level));
    step.z_witness = *zp;
    std::vector<MPoly> values;
    for (const auto& r : conjugate_values(d, f, *zp)) {
      auto rp = r.as_polynomial();
      if (!rp) throw DomainError("a conjugate of the level element is not a polynomial of x");
      values.push_back(*rp);
    }
    step.average = resolvent_average(d, f, values);
  } else {
    MPoly embedded(f.n());
    if (level == s) {
      embedded = MPoly::variable(f.n(), 0);
    } else {
      if (level >= f.witnesses.size() || !f.witnesses[level])
        throw DomainError("level " + std::to_string(level + 1) + " needs a witness before level " +
                          std::to_string(level) + " can be derived");
      embedded = f.witnesses[level]->pow(tower.k(level + 1));
    }
    step.average = derive_z_witness(d, f, embedded);
    if (!step.average) throw DomainError("no witness for z at level " + std::to_string(level) + " found in the orbit");
    step.z_witness = step.average->value;
    step.derived = true;
  }

  // New tower: same below `level`, z^k = u^k p^l at `level`, images above.
  const TowerSpec& old = tower.spec();
  TowerSpec base{old.n, {}, {}, {}};
  for (std::size_t m = 0; m + 1 < level; ++m) {
    base.ks.push_back(old.ks[m]);
    base.ps.push_back(old.ps[m]);
    base.attestations.push_back(old.attestations[m]);
  }
  // p^l not a k-th power and gcd(l, k) = 1 imply u^k p^l is not one either.
  const Tower low(base);
  const Tower at_level = low.extended(d.k, d.z_power, old.attestations[level - 1]);
  const std::size_t below = level - 1;
  const TowerElem Y = at_level.mul(
      at_level.mul(generator_power(at_level, level, d.b), at_level.pow(d.u, -d.b)), at_level.pow(tower.p(below), d.a));

  std::function<TowerElem(const TowerElem&)> phi = [&](const TowerElem& e) -> TowerElem {
    if (e.level() < level) return e;
    if (e.level() == level) {
      TowerElem acc = at_level.zero(level);
      for (std::size_t i = e.coeffs().size(); i-- > 0;) acc = at_level.add(at_level.mul(acc, Y), e.coeffs()[i]);
      return acc;
    }
    std::vector<TowerElem> coeffs;
    for (const auto& c : e.coeffs()) coeffs.push_back(phi(c));
    return TowerElem(e.level(), std::move(coeffs));
  };

  Tower rebuilt = at_level;
  for (std::size_t m = level; m < s; ++m) rebuilt = rebuilt.extended(old.ks[m], phi(tower.p(m)), old.attestations[m]);
  FormalRadicalFormula out{rebuilt, phi(tower.lift(f.target, s)), f.witnesses};
  out.witnesses.resize(s);
  out.witnesses[level - 1] = step.z_witness;

  // Relations whose witnesses are all known.
  const WitnessReport wr = witness_check(out.tower, out.witnesses);
  bool complete = true;
  for (std::size_t m = 1; m <= s; ++m) {
    complete = complete && out.witnesses[m - 1].has_value();
    if (complete) step.checks.push_back(wr.checks[m - 1]);
  }
  if (complete) step.checks.push_back(verify_formal_formula(out).checks.back());
  step.data = std::move(d);
  step.result = std::move(out);
  return step;
}

std::string AbelReport::to_text() const {
  std::ostringstream os;
  for (const auto& note : notes) os << "note " << note << "\n";
  for (const auto& st : steps) {
    os << "step level " << st.level << "\n";
    if (st.skipped) {
      os << "  skipped: " << st.note << "\n";
      continue;
    }
    const Tower& t = st.result->tower;
    const auto& d = *st.data;
    os << "  l=" << d.l << " a=" << d.a << " b=" << d.b << " u=" << t.to_string(d.u) << "\n";
    os << "  z = u*y" << d.level << "^" << d.l << " ; z^" << d.k << " = " << t.to_string(d.z_power) << "\n";
    std::string q;
    for (std::size_t i = d.q.coeffs.size(); i-- > 0;) {
      if (t.is_zero(d.q.coeffs[i])) continue;
      if (!q.empty()) q += " + ";
      q += "(" + t.to_string(d.q.coeffs[i]) + ")" + (i == 0 ? "" : (i == 1 ? "*z" : "*z^" + std::to_string(i)));
    }
    os << "  q(z) = " << q << "\n";
    os << "  resolvent average " << (st.symbolic_telescoping ? "telescopes to z" : "does not telescope") << "\n";
    if (st.z_witness)
      os << "  witness z = " << st.z_witness->to_string() << (st.derived ? " (derived from the S_n orbit)" : "")
         << "\n";
    if (st.average)
      for (const auto& c : st.average->checks) os << "  " << render_line(c) << "\n";
    for (const auto& c : st.checks) os << "  " << render_line(c) << "\n";
  }
  os << "result " << (poly ? "polyformula" : "towerformula") << "\n";
  return os.str();
}

AbelReport abel_polynomialize(const FormalRadicalFormula& f) {
  AbelReport report{{}, f, std::nullopt, {}};
  for (std::size_t level = f.s(); level >= 1; --level) {
    AbelStep step = abel_step(report.result, level);
    report.result = *step.result;
    report.steps.push_back(std::move(step));
  }
  try {
    report.poly = to_poly_formula(report.result);
  } catch (const DomainError& e) {
    report.notes.push_back(std::string("kept in tower form: ") + e.what());
  }
  return report;
}

}  // namespace radix
