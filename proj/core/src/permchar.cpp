#include "radix/permchar.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "radix/error.hpp"

namespace radix {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<Perm> an_generators(std::size_t n) {
  if (n < 3) throw DomainError("A_n generators need n >= 3, got " + std::to_string(n));
  std::vector<Perm> gens;
  for (std::uint32_t m = 3; m <= n; ++m) gens.push_back(Perm::cycle(n, {1, 2, m}));
  return gens;
}

std::vector<Perm> group_closure(const std::vector<Perm>& gens, std::size_t cap) {
  if (gens.empty()) throw DomainError("closure of an empty generating set");
  const std::size_t n = gens.front().degree();
  std::set<Perm> seen{Perm::identity(n)};
  std::vector<Perm> frontier{Perm::identity(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& g : frontier) {
      for (const auto& h : gens) {
        Perm gh = compose(g, h);
        if (seen.insert(gh).second) {
          if (seen.size() > cap) throw DomainError("group exceeds enumeration cap of " + std::to_string(cap));
          next.push_back(std::move(gh));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Perm> commutator_closure(const std::vector<Perm>& gens, std::size_t cap) {
  const auto group = group_closure(gens, cap);
  std::vector<Perm> inverses;
  inverses.reserve(group.size());
  for (const auto& g : group) inverses.push_back(g.inverse());
  std::set<Perm> commutators;
  for (std::size_t a = 0; a < group.size(); ++a)
    for (std::size_t b = 0; b < group.size(); ++b)
      commutators.insert(compose(compose(group[a], group[b]), compose(inverses[a], inverses[b])));
  return group_closure({commutators.begin(), commutators.end()}, cap);
}

bool power_is_even_symmetric(const MPoly& f, std::uint32_t q) {
  if (f.is_zero() || f.nvars() < 3) return true;
  const auto& [lead_exp, lead_coeff] = f.leading_term();
  for (const auto& g : an_generators(f.nvars())) {
    const MPoly moved = permute_vars(f, g);
    const CycScalar c = moved.coefficient(lead_exp) / lead_coeff;
    if (!c.pow(q).is_one() || !(moved == f * c)) return false;
  }
  return true;
}

namespace {

void require_character_inputs(const MPoly& f, std::uint32_t q) {
  if (f.is_zero()) throw DomainError("character of the zero polynomial is undefined");
  if (!is_prime(q)) throw DomainError("character exponent " + std::to_string(q) + " is not prime");
  if (!power_is_even_symmetric(f, q))
    throw DomainError("f^" + std::to_string(q) + " is not even-symmetric");
}

CycScalar character_value(const MPoly& f, std::uint32_t q, const Perm& alpha) {
  if (alpha.degree() != f.nvars()) throw Mismatch("permutation degree does not match variable count");
  if (!alpha.is_even()) throw DomainError("character is defined on even permutations; " + alpha.to_string() + " is odd");
  const MPoly moved = permute_vars(f, alpha);
  const CycScalar step = root_of_unity(q);
  CycScalar chi(1L);
  for (std::uint32_t m = 0; m < q; ++m) {
    if (moved * chi == f) return chi;
    chi *= step;
  }
  throw DomainError("no " + std::to_string(q) + "-th root of unity relates f and f(x_alpha) for alpha = " +
                    alpha.to_string());
}

}  // namespace

CycScalar character_of(const MPoly& f, std::uint32_t q, const Perm& alpha) {
  require_character_inputs(f, q);
  return character_value(f, q, alpha);
}

bool Character::is_trivial() const {
  for (const auto& [g, v] : values)
    if (!v.is_one()) return false;
  return true;
}

std::optional<CycScalar> Character::at(const Perm& alpha) const {
  for (const auto& [g, v] : values)
    if (g == alpha) return v;
  return std::nullopt;
}

std::vector<std::string> Character::render() const {
  std::vector<std::string> out;
  for (const auto& [g, v] : values) out.push_back(g.to_string() + " -> " + render_root_of_unity(v, q));
  return out;
}

std::string render_root_of_unity(const CycScalar& c, std::uint32_t q) {
  auto m = root_of_unity_exponent(c, q);
  if (!m) return c.to_string();
  return "w(" + std::to_string(q) + ")^" + std::to_string(*m);
}

Character make_character(const MPoly& f, std::uint32_t q, const std::vector<Perm>& gens) {
  require_character_inputs(f, q);
  Character chi;
  chi.n = f.nvars();
  chi.q = q;
  chi.source = f;
  for (const auto& g : gens) chi.values.emplace_back(g, character_value(f, q, g));
  for (const auto& [g, vg] : chi.values) {
    for (const auto& [h, vh] : chi.values) {
      if (character_value(f, q, compose(g, h)) != vg * vh)
        throw std::logic_error("character is not multiplicative on " + g.to_string() + " " + h.to_string());
    }
  }
  return chi;
}

MPoly small_degree_resolvent(std::size_t n) {
  const CycScalar e = root_of_unity(3);
  if (n == 3) {
    return MPoly::variable(3, 0) + MPoly::variable(3, 1) * e + MPoly::variable(3, 2) * e.pow(2);
  }
  if (n == 4) {
    auto x = [](std::size_t i) { return MPoly::variable(4, i); };
    const MPoly t1 = x(0) * x(1) + x(2) * x(3);
    const MPoly t2 = x(0) * x(2) + x(1) * x(3);
    const MPoly t3 = x(0) * x(3) + x(1) * x(2);
    return t1 + t2 * e + t3 * e.pow(2);
  }
  throw DomainError("resolvent counterexamples exist for n = 3, 4 only");
}

bool HomTrivialityReport::routes_agree() const {
  if (!generator_route_applies || !oracle_route_run) return true;
  return all_pass(generator_route) == all_pass(oracle_route);
}

std::string HomTrivialityReport::to_text() const {
  std::ostringstream os;
  os << "hom-trivial n=" << n << " q=" << q << "\n";
  if (generator_route_applies) {
    os << "route generators\n";
    for (const auto& c : generator_route) os << "  " << render_line(c) << "\n";
  } else {
    os << "route generators not-applicable (needs n >= 5)\n";
  }
  if (oracle_route_run) {
    os << "route perfectness |G|=" << group_order << " |G'|=" << derived_order << "\n";
    for (const auto& c : oracle_route) os << "  " << render_line(c) << "\n";
  } else {
    os << "route perfectness skipped (group beyond enumeration cap)\n";
  }
  if (counterexample) {
    os << "counterexample f = " << counterexample->source.to_string() << "\n";
    for (const auto& line : counterexample->render()) os << "  chi " << line << "\n";
  }
  os << "verdict " << (verdict == Verdict::Trivial ? "TRIVIAL" : "COUNTEREXAMPLE") << "\n";
  return os.str();
}

namespace {

std::vector<IdentityCheck> generator_route_checks(std::size_t n, std::uint32_t q) {
  std::vector<IdentityCheck> checks;

  // Every even permutation is a product of pairs of transpositions; both pair
  // shapes reduce to 3-cycles.
  std::size_t tuples = 0;
  bool adjacent_ok = true;
  bool disjoint_ok = true;
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = 1; j <= n; ++j)
      for (std::uint32_t k = 1; k <= n; ++k)
        for (std::uint32_t l = 1; l <= n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          ++tuples;
          const Perm ij = Perm::transposition(n, i, j);
          if (compose(ij, Perm::transposition(n, j, k)) != Perm::cycle(n, {i, j, k})) adjacent_ok = false;
          if (compose(ij, Perm::transposition(n, k, l)) !=
              compose(Perm::cycle(n, {i, j, k}), Perm::cycle(n, {j, k, l})))
            disjoint_ok = false;
        }
  checks.push_back({"(ij)(jk) = (ijk) for all " + std::to_string(tuples) + " index tuples", adjacent_ok, ""});
  checks.push_back({"(ij)(kl) = (ijk)(jkl) for all " + std::to_string(tuples) + " index tuples", disjoint_ok, ""});

  for (const auto& g : an_generators(n)) {
    const std::uint32_t m = g(1) + 1;  // g = (1 2 m) sends 2 to m
    if (q != 3) {
      const bool cube = g.pow(3).is_identity();
      checks.push_back({"chi(" + g.to_string() + ")^3 = chi(" + g.to_string() + "^3) = 1, gcd(3," + std::to_string(q) +
                            ")=1 => chi(" + g.to_string() + ") = 1",
                        cube && std::gcd(3u, q) == 1, cube ? "" : "3-cycle does not have order 3"});
      continue;
    }
    std::vector<std::uint32_t> rest;
    for (std::uint32_t v = 3; v <= n && rest.size() < 2; ++v)
      if (v != m) rest.push_back(v);
    const std::uint32_t i = 1, j = 2, k = m, l = rest[0], last = rest[1];
    const Perm c1 = Perm::cycle(n, {last, l, k, j, i});
    const Perm c2 = Perm::cycle(n, {i, k, j, l, last});
    const bool fifth = c1.pow(5).is_identity() && c2.pow(5).is_identity();
    const bool product = compose(c1, c2) == g;
    checks.push_back({"chi(5-cycle)^5 = 1, gcd(5,3)=1 => chi(" + c1.to_string() + ") = chi(" + c2.to_string() + ") = 1",
                      fifth, fifth ? "" : "5-cycle does not have order 5"});
    checks.push_back({g.to_string() + " = " + c1.to_string() + c2.to_string() + " => chi(" + g.to_string() + ") = 1",
                      product, product ? "" : "product is " + compose(c1, c2).to_string()});
  }
  return checks;
}

}  // namespace

HomTrivialityReport verify_hom_trivial(std::size_t n, std::uint32_t q) {
  if (n < 3) throw DomainError("A_n is trivial for n < 3; nothing to certify");
  if (!is_prime(q)) throw DomainError("q = " + std::to_string(q) + " is not prime");
  HomTrivialityReport report;
  report.n = n;
  report.q = q;
  const auto gens = an_generators(n);

  if (n <= 6) {
    report.oracle_route_run = true;
    const auto group = group_closure(gens);
    const auto derived = commutator_closure(gens);
    report.group_order = group.size();
    report.derived_order = derived.size();
    report.oracle_route.push_back({"<(1 2 m)> has order n!/2 = " + std::to_string(factorial(n) / 2),
                                   group.size() == factorial(n) / 2, "enumerated " + std::to_string(group.size())});
    const std::size_t abelianization = group.size() / derived.size();
    if (n >= 5) {
      report.oracle_route.push_back({"commutator closure equals A_" + std::to_string(n) + " (perfect)",
                                     derived == group, "|G'| = " + std::to_string(derived.size())});
    } else {
      report.oracle_route.push_back({"q=" + std::to_string(q) + " does not divide |A_n/A_n'| = " +
                                         std::to_string(abelianization),
                                     abelianization % q != 0, ""});
    }
  }

  if (n >= 5) {
    report.generator_route_applies = true;
    report.generator_route = generator_route_checks(n, q);
    const bool ok = all_pass(report.generator_route) && (!report.oracle_route_run || all_pass(report.oracle_route));
    if (!ok) throw std::logic_error("hom-triviality certificate failed for n >= 5");
    report.verdict = HomTrivialityReport::Verdict::Trivial;
    return report;
  }

  if (all_pass(report.oracle_route)) {
    report.verdict = HomTrivialityReport::Verdict::Trivial;
  } else {
    report.verdict = HomTrivialityReport::Verdict::Counterexample;
    report.counterexample = make_character(small_degree_resolvent(n), q);
  }
  return report;
}

}  // namespace radix
