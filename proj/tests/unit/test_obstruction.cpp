#include <gtest/gtest.h>

#include <map>

#include "radix/dsl.hpp"
#include "radix/error.hpp"
#include "radix/obstruction.hpp"
#include "support.hpp"

namespace radix {
namespace {

using test::read_fixture;
using test::x;

using Outcome = ObstructionReport::Outcome;

PolyRadicalFormula to_poly(const Document& d) {
  if (const auto* s = std::get_if<SolvabilityScheme>(&d)) return vieta_poly(*s);
  return std::get<PolyRadicalFormula>(d);
}

TEST(KeepingSymmetry, Examples) {
  auto v = keeping_symmetry(vandermonde(5), 2);
  EXPECT_TRUE(v.even_symmetric);
  EXPECT_TRUE(v.consistent());
  ASSERT_TRUE(v.hom.has_value());
  EXPECT_EQ(v.hom->verdict, HomTrivialityReport::Verdict::Trivial);

  const CycScalar e = root_of_unity(3);
  auto c = keeping_symmetry(x(3, 1) + e * x(3, 2) + e * e * x(3, 3), 3);
  EXPECT_FALSE(c.even_symmetric);
  EXPECT_TRUE(c.consistent());
  ASSERT_TRUE(c.character.has_value());
  EXPECT_EQ(c.character->at(Perm::cycle(3, {1, 2, 3})), e);
  EXPECT_NE(c.to_text().find("w(3)^1"), std::string::npos) << c.to_text();

  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    auto s = keeping_symmetry(elem_sym(5, 2) + elem_sym(5, 5), q);
    EXPECT_TRUE(s.even_symmetric);
    EXPECT_TRUE(s.consistent());
  }
}

TEST(KeepingSymmetry, Preconditions) {
  EXPECT_THROW(keeping_symmetry(MPoly(5), 2), DomainError);
  EXPECT_THROW(keeping_symmetry(x(5, 1), 2), NotSymmetric);
  EXPECT_THROW(keeping_symmetry(vandermonde(5), 4), DomainError);
}

TEST(Ruffini, RefusesSmallDegrees) {
  EXPECT_THROW(run_ruffini(builtin(Builtin::Degree3)), DomainError);
  try {
    run_ruffini(builtin(Builtin::Degree2));
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("builtin"), std::string::npos);
  }
}

TEST(Ruffini, EmptyChainContradictsImmediately) {
  PolyRadicalFormula f{5, {}, {MPoly::variable(5, 0) * CycScalar(Rational(1, 5))}, {}};
  auto r = run_ruffini(f);
  EXPECT_EQ(r.outcome, Outcome::Contradiction);
  EXPECT_EQ(r.failed_at, 1u);
  ASSERT_TRUE(r.final_identity.has_value());
  EXPECT_FALSE(r.final_identity->pass);
  EXPECT_NE(r.conclusion.find("(1 2 3) carries x1 to x2"), std::string::npos) << r.conclusion;
}

TEST(Ruffini, FixtureCorpus) {
  // Expected outcome per fixture: 0 means the x1 contradiction, j > 0 a failed
  // chain identity at level j.
  const std::map<std::string, std::size_t> expected{
      {"01_sigma_only.poly", 0},           {"02_disc_root.poly", 0},      {"03_disc_perturbed.poly", 1},
      {"04_chain_valid.poly", 0},          {"05_chain_perturbed_p1.poly", 2}, {"06_fourth_power.poly", 0},
      {"07_constant_witness.poly", 0},     {"08_cyclotomic_witness.poly", 0}, {"09_odd_witness.poly", 1},
      {"10_zero_witness.poly", 0},         {"11_sixth_root.poly", 0},     {"12_quadratic_shape.poly", 0},
      {"13_scheme.scheme", 0},             {"14_trivial_radical.poly", 0}, {"15_wrong_cube.poly", 2}};
  for (const auto& [name, level] : expected) {
    SCOPED_TRACE(name);
    auto r = run_ruffini(to_poly(parse_document(read_fixture("ruffini/" + name))));
    if (level == 0) {
      EXPECT_EQ(r.outcome, Outcome::Contradiction);
      ASSERT_TRUE(r.final_identity.has_value());
      EXPECT_FALSE(r.final_identity->pass);
      EXPECT_EQ(r.failed_at, r.s + 1);
      for (const auto& l : r.levels) {
        EXPECT_TRUE(l.chain.pass);
        EXPECT_TRUE(l.base_even_symmetric);
        if (l.witness) EXPECT_TRUE(l.witness->even_symmetric);
      }
    } else {
      EXPECT_EQ(r.outcome, Outcome::FailedIdentity);
      EXPECT_EQ(r.failed_at, level);
      EXPECT_FALSE(r.final_identity.has_value());
      EXPECT_FALSE(r.levels.back().chain.pass);
      EXPECT_NE(r.to_text().find("FAILED-IDENTITY at level " + std::to_string(level)), std::string::npos);
    }
  }
}

TEST(Ruffini, ReportTextShape) {
  auto r = run_ruffini(to_poly(parse_document(read_fixture("ruffini/02_disc_root.poly"))));
  const std::string text = r.to_text();
  EXPECT_EQ(text.rfind("obstruct n=5 s=1", 0), 0u) << text;
  EXPECT_NE(text.find("outcome CONTRADICTION"), std::string::npos);
  EXPECT_NE(text.find("A_5 -> Z_2 trivial"), std::string::npos);
}

// Properties ----------------------------------------------------------------

// Even-symmetric building blocks at n = 5.
MPoly even_block(test::Gen& g, std::size_t n) {
  MPoly sym = expand_elementary(g.poly(n, 2, 2));
  if (sym.is_zero()) sym = MPoly::constant(n, CycScalar(1L));
  return g.coin() ? sym : vandermonde(n) * sym;
}

TEST(ObstructionProperty, RandomCandidatesNeverValidate) {
  test::Gen g(71);
  const std::size_t n = 5;
  for (int trial = 0; trial < 12; ++trial) {
    PolyRadicalFormula f;
    f.n = n;
    const auto s = static_cast<std::size_t>(g.integer(0, 2));
    std::vector<MPoly> images;
    for (std::size_t i = 1; i <= n; ++i) images.push_back(elem_sym(n, i));
    for (std::size_t j = 0; j < s; ++j) {
      const std::uint32_t k = g.coin() ? 2 : 3;
      // Witness: an even-symmetric block, occasionally a non-invariant one.
      MPoly w = g.integer(0, 3) == 0 ? x(n, 1) + x(n, 2) : even_block(g, n);
      if (k == 3 && w.size() > 1 && !is_symmetric(w)) w = elem_sym(n, 1);
      f.ks.push_back(k);
      // p_{j} written in sigma only (previous f's unused) when w^k is symmetric.
      MPoly wk = w.pow(k);
      MPoly p = is_symmetric(wk) ? symmetrize(wk).extend(n + j) : g.poly(n + j, 2, 3);
      if (g.integer(0, 4) == 0) p += MPoly::constant(n + j, CycScalar(1L));
      f.ps.push_back(p);
      f.witnesses.push_back(w);
      images.push_back(w);
    }
    MPoly last = g.poly(n + s, 2, 3);
    last += MPoly::variable(n + s, 0) * CycScalar(Rational(1, 5));
    f.ps.push_back(last);
    const auto r = run_ruffini(f);
    EXPECT_TRUE(r.outcome == Outcome::Contradiction || r.outcome == Outcome::FailedIdentity);
    if (r.outcome == Outcome::Contradiction) {
      ASSERT_TRUE(r.final_identity.has_value());
      EXPECT_FALSE(r.final_identity->pass);
    } else {
      EXPECT_FALSE(r.levels.back().chain.pass);
    }
  }
}

TEST(ObstructionProperty, CharacterRouteAgreesWithDirectCheck) {
  test::Gen g(72);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(3, 5));
    const std::uint32_t q = g.coin() ? 2 : 3;
    MPoly f = even_block(g, n);
    if (n <= 4 && q == 3 && g.coin()) f = small_degree_resolvent(n) * expand_elementary(g.nonzero_poly(n, 0, 1));
    if (!power_is_even_symmetric(f, q)) continue;
    const auto v = keeping_symmetry(f, q);
    EXPECT_TRUE(v.consistent()) << f;
    EXPECT_EQ(v.direct_check, is_even_symmetric(f));
    if (n >= 5) EXPECT_TRUE(v.even_symmetric);
  }
}

TEST(ObstructionProperty, EvenSymmetryPassesThroughPolynomials) {
  test::Gen g(73);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(3, 4));
    const auto j = static_cast<std::size_t>(g.integer(1, 2));
    std::vector<MPoly> images;
    for (std::size_t i = 1; i <= n; ++i) images.push_back(elem_sym(n, i));
    for (std::size_t i = 0; i < j; ++i) images.push_back(even_block(g, n));
    MPoly p = g.poly(n + j, 2, 3);
    EXPECT_TRUE(is_even_symmetric(substitute(p, images)));
  }
}

}  // namespace
}  // namespace radix
