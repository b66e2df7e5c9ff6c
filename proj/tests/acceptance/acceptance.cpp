// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "radix/dsl.hpp"
#include "radix/obstruction.hpp"
#include "radix/resolvent.hpp"
#include "support.hpp"

namespace radix {
namespace {

using test::x;

MPoly sig(std::size_t nv, std::size_t i) { return MPoly::variable(nv, i - 1); }

// Each criterion returns an empty string on success, a reason otherwise.
struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<std::string()> body;
};

#define REQUIRE(cond, why) \
  do {                     \
    if (!(cond)) return why; \
  } while (0)

std::string quadratic_example() {
  const auto f = builtin(Builtin::Degree2);
  REQUIRE(f.ps[0] == sig(2, 1).pow(2) - CycScalar(4L) * sig(2, 2), "p0 is not s1^2 - 4 s2");
  REQUIRE(f.ps[1] == (sig(3, 1) + sig(3, 3)) * CycScalar(Rational(1, 2)), "p1 is not (s1 + f1)/2");
  const auto r = verify_poly_formula(f);
  REQUIRE(r.valid(), r.to_text());
  // f1^2 = p0 directly, by expansion.
  REQUIRE((x(2, 1) - x(2, 2)).pow(2) == expand_elementary(f.ps[0]), "f1^2 differs from p0 after expansion");
  return {};
}

std::string cubic_chain() {
  const auto f = builtin(Builtin::Degree3);
  const auto r = verify_poly_formula(f);
  REQUIRE(r.valid(), r.to_text());
  REQUIRE(f.ps[0] == symmetrize(f.witnesses[0].pow(f.ks[0])), "p0 is not the symmetrized square");
  REQUIRE(expand_elementary(f.ps[0]) == f.witnesses[0].pow(f.ks[0]), "p0 does not expand back");
  // Each later p_j, with the earlier witnesses substituted, equals f_{j+1}^k.
  std::vector<MPoly> images;
  for (std::size_t i = 1; i <= f.n; ++i) images.push_back(elem_sym(f.n, i));
  for (std::size_t j = 0; j < f.s(); ++j) {
    REQUIRE(substitute(f.ps[j], images) == f.witnesses[j].pow(f.ks[j]), "chain identity " + std::to_string(j + 1));
    images.push_back(f.witnesses[j]);
  }
  REQUIRE(substitute(f.ps.back(), images) == x(3, 1), "final identity");
  return {};
}

std::string hom_trivial_a5() {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    const auto r = verify_hom_trivial(5, q);
    const std::string tag = "q=" + std::to_string(q) + ": ";
    REQUIRE(r.verdict == HomTrivialityReport::Verdict::Trivial, tag + "not trivial");
    REQUIRE(r.generator_route_applies && !r.generator_route.empty() && all_pass(r.generator_route),
            tag + "generator route");
    REQUIRE(r.oracle_route_run && all_pass(r.oracle_route), tag + "oracle route");
    REQUIRE(r.group_order == 60 && r.derived_order == 60, tag + "A5 is not perfect here");
    REQUIRE(r.routes_agree(), tag + "routes disagree");
  }
  REQUIRE(commutator_closure(an_generators(5)).size() == 60, "commutator closure of A5");
  return {};
}

std::string keeping_symmetry_boundary() {
  const auto v = keeping_symmetry(vandermonde(5), 2);
  REQUIRE(v.even_symmetric && v.consistent(), "no certificate for the discriminant root at n=5");
  REQUIRE(v.hom && v.hom->verdict == HomTrivialityReport::Verdict::Trivial, "hom report missing");
  const CycScalar e = root_of_unity(3);
  const auto c = keeping_symmetry(x(3, 1) + e * x(3, 2) + e * e * x(3, 3), 3);
  REQUIRE(!c.even_symmetric && c.consistent(), "no counterexample at n=3");
  REQUIRE(c.character && c.character->at(Perm::cycle(3, {1, 2, 3})) == e, "chi((1 2 3)) is not w(3)");
  return {};
}

TowerElem random_elem(const Tower& t, std::size_t level, test::Gen& g) {
  if (level == 0) {
    MPoly num = g.poly(t.n(), 2, 3);
    if (g.integer(0, 4) == 0) return TowerElem(RatFunc(num, g.nonzero_poly(t.n(), 1, 2)));
    return TowerElem(RatFunc(num));
  }
  std::vector<TowerElem> coeffs;
  for (std::uint32_t i = 0; i < t.k(level); ++i) coeffs.push_back(random_elem(t, level - 1, g));
  return TowerElem(level, coeffs);
}

Tower quadratic_tower() {
  Tower base(TowerSpec{2, {}, {}, {}});
  return base.extended(2, base.from_base(RatFunc(sig(2, 1).pow(2) - CycScalar(4L) * sig(2, 2))),
                       Attestation::Verified);
}

// y^3 = (u^3 - v^3)^2 written in sigma, with u, v the Lagrange resolvents of
// x1, x2, x3: the square of the discriminant root times a constant.
Tower cubic_tower() {
  Tower base(TowerSpec{3, {}, {}, {}});
  const CycScalar e = root_of_unity(3);
  const MPoly u = x(3, 1) + e * x(3, 2) + e * e * x(3, 3);
  const MPoly v = x(3, 1) + e * e * x(3, 2) + e * x(3, 3);
  const MPoly d = (u.pow(3) - v.pow(3)).pow(2);
  return base.extended(3, base.from_base(RatFunc(symmetrize(d))), Attestation::Verified);
}

std::string tower_inverses() {
  test::Gen g(5);
  for (const Tower& t : {quadratic_tower(), cubic_tower()}) {
    int done = 0;
    while (done < 100) {
      const TowerElem u = random_elem(t, 1, g);
      if (t.is_zero(u)) continue;
      REQUIRE(t.equal(t.mul(u, t.inverse(u)), t.one(1)), "u * inverse(u) != 1 at sample " + std::to_string(done));
      ++done;
    }
  }
  return {};
}

std::string annihilation() {
  test::Gen g(6);
  for (const Tower& t : {quadratic_tower(), cubic_tower()}) {
    const std::uint32_t k = t.k(1);
    TowerPoly defining{0, std::vector<TowerElem>(k + 1, t.zero(0))};
    defining.coeffs[0] = t.neg(t.p(0));
    defining.coeffs[k] = t.one(0);
    const auto r = check_annihilation(t, defining, 1);
    REQUIRE(r.remainder_zero, "t^k - p0 leaves a remainder");
    REQUIRE(r.conjugate_roots.size() == k, "conjugate count");
    for (bool b : r.conjugate_roots) REQUIRE(b, "a conjugate of y is not a root");
    for (int trial = 0; trial < 20; ++trial) {
      TowerPoly m{0, {}};
      for (long i = 0; i <= g.integer(0, 2); ++i) m.coeffs.push_back(random_elem(t, 0, g));
      if (t.poly_degree(m) < 0) m.coeffs = {t.one(0)};
      TowerPoly rem{0, {}};
      if (g.coin()) {
        for (std::uint32_t i = 0; i < k; ++i) rem.coeffs.push_back(random_elem(t, 0, g));
        rem = t.poly_trim(rem);
      }
      const auto q = check_annihilation(t, t.poly_add(t.poly_mul(defining, m), rem), 1);
      REQUIRE(q.remainder_zero == (t.poly_degree(rem) < 0), "misclassified multiple, trial " + std::to_string(trial));
      REQUIRE(q.consistent(), "remainder and conjugate evaluation disagree");
    }
  }
  return {};
}

std::string last_radical() {
  const auto report = abel_polynomialize(to_tower(builtin(Builtin::Degree2)));
  REQUIRE(report.steps.size() == 1 && report.steps[0].data, "expected one step");
  const auto& step = report.steps[0];
  REQUIRE(step.z_witness, "no witness for z");
  // The recorded unit is 1/2 here, so z = u (x1 - x2) = (x1 - x2)/2.
  const auto quad = to_tower(builtin(Builtin::Degree2));
  REQUIRE(quad.tower.equal(step.data->u, quad.tower.from_scalar(CycScalar(Rational(1, 2)))), "unit is not 1/2");
  REQUIRE(*step.z_witness == (x(2, 1) - x(2, 2)) * CycScalar(Rational(1, 2)), "z witness is not (x1 - x2)/2");
  REQUIRE(all_pass(step.checks), "a step check failed");
  REQUIRE(report.poly, "no polynomial form");

  const auto path = std::filesystem::temp_directory_path() / "radix_acceptance_abel.poly";
  std::ofstream(path) << serialize(*report.poly);
  cli::CliConfig cfg;
  cfg.command = "verify";
  cfg.inputs = {path.string()};
  std::ostringstream out, err;
  REQUIRE(cli::run(cfg, out, err) == cli::kOk, "verify exit code nonzero: " + out.str() + err.str());

  test::Gen g(7);
  Tower base(TowerSpec{2, {}, {}, {}});
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t k = std::vector<std::uint32_t>{2, 3, 5}[static_cast<std::size_t>(trial % 3)];
    std::vector<TowerElem> coeffs;
    for (std::uint32_t i = 0; i < k; ++i) coeffs.push_back(base.from_base(RatFunc(g.poly(2, 2, 2, g.coin() ? 1 : k))));
    coeffs[1] = base.one(0);
    REQUIRE(is_pure_z(base, resolvent_average_symbolic(base, TowerPoly{0, coeffs}, k)),
            "telescoping fails at sample " + std::to_string(trial));
  }
  return {};
}

std::string ruffini_corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(std::filesystem::path(RADIX_FIXTURE_DIR) / "ruffini"))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  REQUIRE(files.size() >= 10, "fewer than 10 candidates");
  for (const auto& path : files) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const Document d = parse_document(ss.str());
    const PolyRadicalFormula f = std::holds_alternative<SolvabilityScheme>(d)
                                     ? vieta_poly(std::get<SolvabilityScheme>(d))
                                     : std::get<PolyRadicalFormula>(d);
    REQUIRE(f.n == 5, path.filename().string() + " is not an n=5 candidate");
    const auto r = run_ruffini(f);
    const std::string name = path.filename().string();
    if (r.outcome == ObstructionReport::Outcome::Contradiction) {
      REQUIRE(r.final_identity && !r.final_identity->pass, name + ": contradiction without a failed final identity");
      for (const auto& l : r.levels) REQUIRE(l.chain.pass, name + ": contradiction after a failed chain");
    } else {
      REQUIRE(r.failed_at >= 1 && r.failed_at <= r.s, name + ": failure not pinpointed");
      REQUIRE(!r.levels.at(r.failed_at - 1).chain.pass, name + ": named level passes");
    }
  }
  return {};
}

// Random polynomial in s1..sn of weighted degree <= max_weight.
MPoly random_sigma_poly(test::Gen& g, std::size_t n, std::uint32_t max_weight) {
  MPoly p(n);
  const long terms = g.integer(1, 4);
  for (long t = 0; t < terms; ++t) {
    Exponents e(n, 0);
    long budget = g.integer(0, max_weight);
    for (std::size_t tries = 0; tries < 8 && budget > 0; ++tries) {
      const auto i = static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1));
      if (static_cast<long>(i + 1) > budget) continue;
      ++e[i];
      budget -= static_cast<long>(i + 1);
    }
    p.add_term(e, CycScalar(g.rational()));
  }
  return p;
}

std::string symmetric_oracle() {
  test::Gen g(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    const MPoly gs = random_sigma_poly(g, n, 6);
    std::vector<MPoly> sigmas;
    for (std::size_t i = 1; i <= n; ++i) sigmas.push_back(elem_sym(n, i));
    const MPoly f = substitute(gs, sigmas);
    REQUIRE(f.total_degree() <= 6, "generator exceeded degree 6");
    const MPoly back = symmetrize(f);
    REQUIRE(back == gs, "symmetrize did not recover the sigma form at sample " + std::to_string(trial));
    REQUIRE(expand_elementary(back) == f, "expansion is not the identity at sample " + std::to_string(trial));
  }
  return {};
}

std::string build_r_quadratic() {
  const auto r = build_R(x(2, 1) - x(2, 2), 2);
  REQUIRE(r.coefficients_symmetric, "coefficients not symmetric");
  REQUIRE(r.sigma_coeffs.size() == 3, "degree is not 2");
  REQUIRE(r.sigma_coeffs[2] == MPoly::constant(2, CycScalar(1L)), "not monic");
  REQUIRE(r.sigma_coeffs[1].is_zero(), "linear coefficient nonzero");
  REQUIRE(r.sigma_coeffs[0] == -builtin(Builtin::Degree2).ps[0], "constant term is not -p0");
  return {};
}

}  // namespace
}  // namespace radix

int main() {
  using namespace radix;
  const std::vector<Criterion> criteria{
      {1, "quadratic example verifies exactly", 0.1, quadratic_example},
      {2, "cubic chain verifies, sigma forms re-expand", 1, cubic_chain},
      {3, "A5 -> Z_q trivial by both routes, q in {2,3,5,7}", 1, hom_trivial_a5},
      {4, "keeping symmetry: certificate at n=5, counterexample at n=3", 1, keeping_symmetry_boundary},
      {5, "100 tower inverses per spec multiply to 1", 10, tower_inverses},
      {6, "annihilation of t^k - p and random multiples", 1, annihilation},
      {7, "last radical round trip and telescoping", 10, last_radical},
      {8, "obstruction corpus never validates", 30, ruffini_corpus},
      {9, "symmetrize then expand on 200 random inputs", 30, symmetric_oracle},
      {10, "build_R(x1 - x2) = z^2 - p0", 0.1, build_r_quadratic},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string why;
    const auto start = std::chrono::steady_clock::now();
    try {
      why = c.body();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && secs > c.limit_s) {
      std::ostringstream os;
      os << "over time limit " << c.limit_s << " s";
      why = os.str();
    }
    std::cout << (why.empty() ? "PASS " : "FAIL ") << c.id << " " << c.title << " (" << std::fixed
              << std::setprecision(3) << secs << " s)";
    if (!why.empty()) std::cout << ": " << why;
    std::cout << "\n";
    if (!why.empty()) ++failures;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
