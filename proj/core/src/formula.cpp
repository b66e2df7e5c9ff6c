#include "radix/formula.hpp"

#include <sstream>

#include "radix/error.hpp"
#include "radix/permchar.hpp"

namespace radix {

namespace {

void check_exponents(const std::vector<std::uint32_t>& ks) {
  for (std::size_t j = 0; j < ks.size(); ++j)
    if (ks[j] == 0) throw DomainError("k_" + std::to_string(j + 1) + " = 0 is not a radical exponent");
}

void check_chain_shape(std::size_t n, const std::vector<std::uint32_t>& ks, const std::vector<MPoly>& ps) {
  if (n == 0) throw DomainError("degree n must be positive");
  check_exponents(ks);
  if (ps.size() != ks.size() + 1)
    throw Mismatch("expected " + std::to_string(ks.size() + 1) + " polynomials p_0..p_s, got " +
                   std::to_string(ps.size()));
  for (std::size_t j = 0; j < ps.size(); ++j)
    if (ps[j].nvars() != n + j)
      throw Mismatch("p_" + std::to_string(j) + " must have " + std::to_string(n + j) + " variables, has " +
                     std::to_string(ps[j].nvars()));
}

std::vector<MPoly> sigma_images(std::size_t n) {
  std::vector<MPoly> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(elem_sym(n, i));
  return out;
}

std::string power_label(const std::string& name, std::uint32_t k) {
  return k == 1 ? name : name + "^" + std::to_string(k);
}

// Shared by the scheme and polynomial forms: the first n variables are the
// coefficients (a or sigma), the rest are radicals.
struct Chain {
  std::size_t n = 0;
  std::vector<std::uint32_t> ks;
  std::vector<MPoly> ps;
  std::vector<std::optional<MPoly>> witnesses;
};

std::vector<std::uint32_t> prime_factors(std::uint32_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= k; ++d)
    while (k % d == 0) {
      out.push_back(d);
      k /= d;
    }
  if (k > 1) out.push_back(k);
  return out;
}

Chain factor_chain(const Chain& in) {
  check_exponents(in.ks);
  const std::size_t n = in.n;
  Chain out;
  out.n = n;
  // images[i]: old variable i in the new variable space (n + t variables).
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(MPoly::variable(n, i));
  std::size_t t = 0;
  auto images_now = [&]() {
    std::vector<MPoly> cur;
    for (const auto& m : images) cur.push_back(m.extend(n + t));
    return cur;
  };
  for (std::size_t j = 1; j <= in.ks.size(); ++j) {
    const MPoly defining = substitute(in.ps[j - 1], images_now());
    const std::uint32_t k = in.ks[j - 1];
    const auto& w = j - 1 < in.witnesses.size() ? in.witnesses[j - 1] : std::optional<MPoly>{};
    if (k == 1) {
      images.push_back(defining);
      continue;
    }
    const auto qs = prime_factors(k);
    std::uint32_t remaining = k;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      out.ps.push_back(i == 0 ? defining : MPoly::variable(n + t, n + t - 1));
      out.ks.push_back(qs[i]);
      remaining /= qs[i];
      out.witnesses.push_back(w ? std::optional<MPoly>(w->pow(remaining)) : std::nullopt);
      ++t;
    }
    images.push_back(MPoly::variable(n + t, n + t - 1));
  }
  out.ps.push_back(substitute(in.ps.back(), images_now()));
  return out;
}

MPoly vieta_substitute(const MPoly& p, std::size_t n) {
  std::vector<MPoly> images;
  const std::size_t vars = p.nvars();
  for (std::size_t i = 0; i < n; ++i) {
    MPoly v = MPoly::variable(vars, n - i - 1);
    images.push_back((n - i) % 2 == 0 ? v : -v);
  }
  for (std::size_t i = n; i < vars; ++i) images.push_back(MPoly::variable(vars, i));
  return substitute(p, images);
}

MPoly flatten_to_poly(const Tower& tower, const TowerElem& e, const std::string& what) {
  const std::size_t n = tower.n();
  const std::size_t vars = n + e.level();
  MPoly out(vars);
  for (const auto& [yexp, rf] : tower.flatten(e)) {
    auto poly = rf.as_polynomial();
    if (!poly) throw DomainError(what + " has a non-constant denominator in sigma");
    Exponents ex(vars, 0);
    for (std::size_t m = 0; m < yexp.size(); ++m) ex[n + m] = yexp[m];
    out += poly->extend(vars) * MPoly::monomial(ex, CycScalar(1L));
  }
  return out;
}

}  // namespace

std::string describe_difference(const MPoly& diff) {
  const auto& [e, c] = diff.leading_term();
  std::string out = "leading term " + MPoly::monomial(e, c).to_string();
  if (diff.size() <= 8)
    out += " ; difference " + diff.to_string();
  else
    out += " ; difference has " + std::to_string(diff.size()) + " terms";
  return out;
}

bool structurally_equal(const FormalRadicalFormula& a, const FormalRadicalFormula& b) {
  if (a.n() != b.n() || a.tower.spec().ks != b.tower.spec().ks) return false;
  if (a.tower.spec().attestations != b.tower.spec().attestations) return false;
  if (a.witnesses != b.witnesses) return false;
  for (std::size_t j = 0; j < a.s(); ++j)
    if (!a.tower.equal(a.tower.p(j), b.tower.p(j))) return false;
  return a.tower.equal(a.target, b.target);
}

bool structurally_equal(const Document& a, const Document& b) {
  if (a.index() != b.index()) return false;
  if (const auto* fa = std::get_if<FormalRadicalFormula>(&a))
    return structurally_equal(*fa, std::get<FormalRadicalFormula>(b));
  if (const auto* sa = std::get_if<SolvabilityScheme>(&a)) return *sa == std::get<SolvabilityScheme>(b);
  return std::get<PolyRadicalFormula>(a) == std::get<PolyRadicalFormula>(b);
}

void validate(const SolvabilityScheme& f) {
  check_chain_shape(f.n, f.ks, f.ps);
  if (f.witnesses.size() > f.ks.size()) throw Mismatch("more witnesses than radicals");
  for (const auto& w : f.witnesses)
    if (w && w->nvars() != f.n) throw Mismatch("witnesses must be polynomials in x1..xn");
}

void validate(const PolyRadicalFormula& f) {
  check_chain_shape(f.n, f.ks, f.ps);
  if (f.witnesses.size() != f.ks.size())
    throw Mismatch("a polynomial radical formula needs one witness per radical");
  for (const auto& w : f.witnesses)
    if (w.nvars() != f.n) throw Mismatch("witnesses must be polynomials in x1..xn");
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "verify " << kind << "\n";
  for (const auto& c : checks) os << render_line(c) << "\n";
  os << "verdict " << (valid() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

VerificationReport verify_poly_formula(const PolyRadicalFormula& f) {
  validate(f);
  VerificationReport report;
  report.kind = "polyformula";
  std::vector<MPoly> images = sigma_images(f.n);
  for (std::size_t j = 1; j <= f.s(); ++j) {
    const MPoly lhs = f.witnesses[j - 1].pow(f.ks[j - 1]);
    const MPoly rhs = substitute(f.ps[j - 1], images);
    const std::string label = "identity 1." + std::to_string(j) + ": " +
                              power_label("f" + std::to_string(j), f.ks[j - 1]) + " = p" + std::to_string(j - 1) +
                              "(s, f)";
    const MPoly diff = rhs - lhs;
    report.checks.push_back({label, diff.is_zero(), diff.is_zero() ? "" : describe_difference(diff)});
    images.push_back(f.witnesses[j - 1]);
  }
  const MPoly rhs = substitute(f.ps.back(), images);
  const MPoly diff = rhs - MPoly::variable(f.n, 0);
  report.checks.push_back({"identity 2: x1 = p" + std::to_string(f.s()) + "(s, f)", diff.is_zero(),
                           diff.is_zero() ? "" : describe_difference(diff)});
  return report;
}

VerificationReport verify_formal_formula(const FormalRadicalFormula& f) {
  VerificationReport report;
  report.kind = "towerformula";
  report.checks = witness_check(f.tower, f.witnesses).checks;
  bool complete = f.witnesses.size() >= f.s();
  for (std::size_t j = 0; complete && j < f.s(); ++j) complete = f.witnesses[j].has_value();
  const std::string label = "target: x1 = p" + std::to_string(f.s());
  if (!complete) {
    report.checks.push_back({label, false, "needs a witness for every level"});
    return report;
  }
  const RatFunc rhs = f.tower.embed(f.target, f.witnesses);
  const RatFunc diff = rhs - RatFunc(MPoly::variable(f.n(), 0));
  if (diff.is_zero()) {
    report.checks.push_back({label, true, ""});
  } else if (auto poly = diff.as_polynomial()) {
    report.checks.push_back({label, false, describe_difference(*poly)});
  } else {
    report.checks.push_back({label, false, "difference " + diff.to_string(indexed_names("x"))});
  }
  return report;
}

VerificationReport verify_scheme(const SolvabilityScheme& f) {
  validate(f);
  bool complete = f.witnesses.size() == f.s();
  for (const auto& w : f.witnesses) complete = complete && w.has_value();
  if (complete && f.s() > 0) {
    VerificationReport report = verify_poly_formula(vieta_poly(f));
    report.kind = "scheme";
    return report;
  }
  if (f.s() == 0) {
    VerificationReport report = verify_poly_formula(vieta_poly(f));
    report.kind = "scheme";
    return report;
  }
  // Missing witnesses: the tower path reports which relations cannot be checked.
  VerificationReport report = verify_formal_formula(vieta_convert(f));
  report.kind = "scheme";
  return report;
}

VerificationReport verify_document(const Document& d) {
  return std::visit(
      [](const auto& f) -> VerificationReport {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, SolvabilityScheme>)
          return verify_scheme(f);
        else if constexpr (std::is_same_v<T, PolyRadicalFormula>)
          return verify_poly_formula(f);
        else
          return verify_formal_formula(f);
      },
      d);
}

PolyRadicalFormula vieta_poly(const SolvabilityScheme& s) {
  validate(s);
  PolyRadicalFormula out;
  out.n = s.n;
  out.ks = s.ks;
  for (const auto& p : s.ps) out.ps.push_back(vieta_substitute(p, s.n));
  for (std::size_t j = 0; j < s.s(); ++j) {
    if (j >= s.witnesses.size() || !s.witnesses[j])
      throw DomainError("witness " + std::to_string(j + 1) + " is missing");
    out.witnesses.push_back(*s.witnesses[j]);
  }
  return out;
}

FormalRadicalFormula vieta_convert(const SolvabilityScheme& s) {
  validate(s);
  std::vector<RatFunc> ps;
  for (const auto& p : s.ps) ps.emplace_back(vieta_substitute(p, s.n));
  FormalRadicalFormula out = tower_from_ratfuncs(s.n, s.ks, ps);
  out.witnesses = s.witnesses;
  out.witnesses.resize(s.s());
  return out;
}

FormalRadicalFormula tower_from_ratfuncs(std::size_t n, const std::vector<std::uint32_t>& ks,
                                         const std::vector<RatFunc>& ps, const std::vector<bool>& asserted) {
  if (ps.size() != ks.size() + 1) throw Mismatch("expected p_0..p_s");
  Tower tower(TowerSpec{n, {}, {}, {}});
  for (std::size_t j = 0; j < ks.size(); ++j) {
    const TowerElem pj = tower.from_ratfunc(ps[j], j);
    const bool user = j < asserted.size() && asserted[j];
    tower = tower.extended(ks[j], pj, user ? Attestation::Asserted : Attestation::Unknown);
    if (!user && nonpower_check(tower, j + 1).verdict == NonpowerResult::Verdict::Verified)
      tower = tower.with_attestation(j + 1, Attestation::Verified);
  }
  TowerElem target = tower.from_ratfunc(ps.back(), ks.size());
  return FormalRadicalFormula{std::move(tower), std::move(target), std::vector<std::optional<MPoly>>(ks.size())};
}

SolvabilityScheme factor_radicals(const SolvabilityScheme& f) {
  const Chain c = factor_chain({f.n, f.ks, f.ps, f.witnesses});
  bool any = false;
  for (const auto& w : c.witnesses) any = any || w.has_value();
  return SolvabilityScheme{c.n, c.ks, c.ps, any ? c.witnesses : std::vector<std::optional<MPoly>>{}};
}

PolyRadicalFormula factor_radicals(const PolyRadicalFormula& f) {
  const Chain c = factor_chain({f.n, f.ks, f.ps, {f.witnesses.begin(), f.witnesses.end()}});
  PolyRadicalFormula out{c.n, c.ks, c.ps, {}};
  for (const auto& w : c.witnesses) out.witnesses.push_back(*w);
  return out;
}

FormalRadicalFormula factor_radicals(const FormalRadicalFormula& f) { return f; }

FormalRadicalFormula to_tower(const PolyRadicalFormula& f) {
  validate(f);
  for (std::size_t j = 0; j < f.s(); ++j)
    if (!is_prime(f.ks[j]))
      throw DomainError("k_" + std::to_string(j + 1) + " = " + std::to_string(f.ks[j]) +
                        " is not prime; factor the radicals first");
  std::vector<RatFunc> ps(f.ps.begin(), f.ps.end());
  FormalRadicalFormula out = tower_from_ratfuncs(f.n, f.ks, ps);
  out.witnesses.assign(f.witnesses.begin(), f.witnesses.end());
  return out;
}

PolyRadicalFormula to_poly_formula(const FormalRadicalFormula& f) {
  PolyRadicalFormula out;
  out.n = f.n();
  out.ks = f.tower.spec().ks;
  for (std::size_t j = 0; j < f.s(); ++j) {
    if (j >= f.witnesses.size() || !f.witnesses[j]) throw DomainError("level " + std::to_string(j + 1) + " has no witness");
    out.witnesses.push_back(*f.witnesses[j]);
    out.ps.push_back(flatten_to_poly(f.tower, f.tower.p(j), "p" + std::to_string(j)));
  }
  out.ps.push_back(flatten_to_poly(f.tower, f.tower.lift(f.target, f.s()), "the target"));
  return out;
}

std::optional<Builtin> builtin_from_name(std::string_view name) {
  if (name == "degree2") return Builtin::Degree2;
  if (name == "degree3") return Builtin::Degree3;
  return std::nullopt;
}

PolyRadicalFormula builtin(Builtin which) {
  const CycScalar half = CycScalar(Rational(1, 2));
  if (which == Builtin::Degree2) {
    PolyRadicalFormula f;
    f.n = 2;
    f.ks = {2};
    const MPoly s1 = MPoly::variable(2, 0), s2 = MPoly::variable(2, 1);
    f.ps.push_back(s1 * s1 - s2 * CycScalar(4L));
    f.ps.push_back((MPoly::variable(3, 0) + MPoly::variable(3, 2)) * half);
    f.witnesses.push_back(MPoly::variable(2, 0) - MPoly::variable(2, 1));
    return f;
  }
  const CycScalar e = root_of_unity(3);
  const MPoly x1 = MPoly::variable(3, 0), x2 = MPoly::variable(3, 1), x3 = MPoly::variable(3, 2);
  const MPoly u = x1 + x2 * e + x3 * (e * e);
  const MPoly v = x1 + x2 * (e * e) + x3 * e;
  const MPoly u3 = u.pow(3), v3 = v.pow(3);
  const MPoly disc = symmetrize((u3 - v3).pow(2));
  const MPoly sum = symmetrize(u3 + v3);

  PolyRadicalFormula f;
  f.n = 3;
  f.ks = {2, 3, 3};
  f.ps.push_back(disc);
  f.ps.push_back((sum.extend(4) + MPoly::variable(4, 3)) * half);
  f.ps.push_back((sum.extend(5) - MPoly::variable(5, 3)) * half);
  f.ps.push_back((MPoly::variable(6, 0) + MPoly::variable(6, 4) + MPoly::variable(6, 5)) * CycScalar(Rational(1, 3)));
  f.witnesses = {u3 - v3, u, v};
  return f;
}

}  // namespace radix
