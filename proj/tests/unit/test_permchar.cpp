#include <gtest/gtest.h>

#include "radix/error.hpp"
#include "radix/permchar.hpp"
#include "support.hpp"

namespace radix {
namespace {

using test::x;

MPoly lagrange3() {
  const CycScalar e = root_of_unity(3);
  return x(3, 1) + e * x(3, 2) + e * e * x(3, 3);
}

TEST(Generators, Closures) {
  auto g3 = an_generators(3);
  ASSERT_EQ(g3.size(), 1u);
  EXPECT_EQ(g3[0], Perm::cycle(3, {1, 2, 3}));
  auto g4 = an_generators(4);
  ASSERT_EQ(g4.size(), 2u);
  EXPECT_EQ(g4[1], Perm::cycle(4, {1, 2, 4}));
  EXPECT_EQ(group_closure(g4).size(), 12u);
  EXPECT_EQ(group_closure(an_generators(5)).size(), 60u);
  EXPECT_EQ(group_closure(an_generators(6)).size(), 360u);
  EXPECT_THROW(an_generators(2), DomainError);
  for (const auto& p : group_closure(an_generators(5))) EXPECT_TRUE(p.is_even());
}

TEST(Commutators, Examples) {
  EXPECT_EQ(commutator_closure(an_generators(5)).size(), 60u);
  auto c2 = commutator_closure({Perm::transposition(4, 1, 2)});
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_TRUE(c2[0].is_identity());
  auto a3 = commutator_closure(an_generators(3));
  ASSERT_EQ(a3.size(), 1u);
  EXPECT_TRUE(a3[0].is_identity());
  // A4' is the Klein four-group.
  EXPECT_EQ(commutator_closure(an_generators(4)).size(), 4u);
}

TEST(Character, Examples) {
  EXPECT_TRUE(character_of(vandermonde(5), 2, Perm::cycle(5, {1, 2, 3})).is_one());
  EXPECT_EQ(character_of(lagrange3(), 3, Perm::cycle(3, {1, 2, 3})), root_of_unity(3));
  const MPoly sym = elem_sym(4, 2) * elem_sym(4, 1);
  for (std::uint32_t q : {2u, 3u, 5u})
    for (const auto& a : group_closure(an_generators(4))) EXPECT_TRUE(character_of(sym, q, a).is_one());
}

TEST(Character, PreconditionsEnforced) {
  EXPECT_THROW(character_of(vandermonde(3), 2, Perm::transposition(3, 1, 2)), DomainError);
  EXPECT_THROW(character_of(MPoly(3), 2, Perm::cycle(3, {1, 2, 3})), DomainError);
  // x1 is not a root of anything even-symmetric of exponent 2.
  EXPECT_THROW(character_of(x(3, 1), 2, Perm::cycle(3, {1, 2, 3})), DomainError);
}

TEST(Character, RecordsAndRenders) {
  Character chi = make_character(lagrange3(), 3);
  EXPECT_FALSE(chi.is_trivial());
  ASSERT_EQ(chi.render().size(), 1u);
  EXPECT_EQ(chi.render()[0], "(1 2 3) -> w(3)^1");
  EXPECT_EQ(render_root_of_unity(CycScalar(1L), 3), "w(3)^0");
  EXPECT_TRUE(make_character(vandermonde(5), 2).is_trivial());
}

TEST(HomTrivial, Examples) {
  auto r52 = verify_hom_trivial(5, 2);
  EXPECT_EQ(r52.verdict, HomTrivialityReport::Verdict::Trivial);
  EXPECT_TRUE(r52.generator_route_applies);
  EXPECT_TRUE(r52.oracle_route_run);
  EXPECT_TRUE(r52.routes_agree());
  EXPECT_EQ(r52.group_order, 60u);
  EXPECT_EQ(r52.derived_order, 60u);

  auto r53 = verify_hom_trivial(5, 3);
  EXPECT_EQ(r53.verdict, HomTrivialityReport::Verdict::Trivial);
  EXPECT_TRUE(all_pass(r53.generator_route));
  EXPECT_NE(r53.to_text().find("5"), std::string::npos);

  auto r33 = verify_hom_trivial(3, 3);
  EXPECT_EQ(r33.verdict, HomTrivialityReport::Verdict::Counterexample);
  ASSERT_TRUE(r33.counterexample.has_value());
  EXPECT_EQ(r33.counterexample->at(Perm::cycle(3, {1, 2, 3})), root_of_unity(3));

  EXPECT_EQ(verify_hom_trivial(4, 3).verdict, HomTrivialityReport::Verdict::Counterexample);
  EXPECT_EQ(verify_hom_trivial(4, 2).verdict, HomTrivialityReport::Verdict::Trivial);
  EXPECT_THROW(verify_hom_trivial(5, 4), DomainError);
  EXPECT_THROW(verify_hom_trivial(2, 2), DomainError);
}

TEST(HomTrivial, AllSmallPrimesAtDegreeFiveAndSix) {
  for (std::size_t n : {5u, 6u})
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u}) {
      auto r = verify_hom_trivial(n, q);
      EXPECT_EQ(r.verdict, HomTrivialityReport::Verdict::Trivial) << n << "," << q;
      EXPECT_TRUE(r.routes_agree()) << n << "," << q;
    }
}

TEST(SmallResolvent, NontrivialCharacters) {
  for (std::size_t n : {3u, 4u}) {
    MPoly f = small_degree_resolvent(n);
    EXPECT_TRUE(power_is_even_symmetric(f, 3));
    EXPECT_FALSE(is_even_symmetric(f));
    EXPECT_FALSE(make_character(f, 3).is_trivial());
  }
}

TEST(PowerEvenSymmetric, AgreesWithExpansion) {
  test::Gen g(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(3, 4));
    const std::uint32_t q = trial % 2 == 0 ? 2 : 3;
    MPoly f = g.coin() ? g.nonzero_poly(n, 2, 3) : vandermonde(n) * g.nonzero_poly(n, 0, 1);
    EXPECT_EQ(power_is_even_symmetric(f, q), is_even_symmetric(f.pow(q))) << f;
  }
}

TEST(CharacterProperty, Homomorphism) {
  test::Gen g(22);
  const std::vector<std::pair<MPoly, std::uint32_t>> cases{
      {lagrange3(), 3}, {small_degree_resolvent(4), 3}, {vandermonde(4), 2}, {vandermonde(5), 2}};
  for (const auto& [f, q] : cases) {
    const std::size_t n = f.nvars();
    for (int trial = 0; trial < 20; ++trial) {
      Perm a = g.even_perm(n), b = g.even_perm(n);
      EXPECT_EQ(character_of(f, q, a * b), character_of(f, q, a) * character_of(f, q, b));
      EXPECT_TRUE(character_of(f, q, a).pow(q).is_one());
    }
  }
}

TEST(CharacterProperty, TrivialOnGeneratorsFromFive) {
  test::Gen g(23);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(5, 6));
    // Random polynomials whose power is even-symmetric: c * Delta^e * (symmetric).
    MPoly sym = expand_elementary(g.poly(n, 2, 2)) + MPoly::constant(n, CycScalar(1L));
    MPoly f = vandermonde(n).pow(static_cast<std::uint32_t>(g.integer(0, 1))) * sym;
    for (std::uint32_t q : {2u, 3u}) {
      if (!power_is_even_symmetric(f, q)) continue;
      for (const auto& a : an_generators(n)) EXPECT_TRUE(character_of(f, q, a).is_one());
    }
  }
}

}  // namespace
}  // namespace radix
