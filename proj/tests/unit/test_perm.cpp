#include <gtest/gtest.h>

#include "radix/error.hpp"
#include "radix/perm.hpp"
#include "support.hpp"

namespace radix {
namespace {

TEST(Perm, ComposeExamples) {
  const Perm t12 = Perm::transposition(4, 1, 2);
  EXPECT_TRUE((t12 * t12).is_identity());
  EXPECT_EQ(Perm::transposition(3, 1, 2) * Perm::transposition(3, 2, 3), Perm::cycle(3, {1, 2, 3}));
  const Perm lhs = Perm::transposition(4, 1, 2) * Perm::transposition(4, 3, 4);
  const Perm rhs = Perm::cycle(4, {1, 2, 3}) * Perm::cycle(4, {2, 3, 4});
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(lhs(0), 1u);
  EXPECT_EQ(lhs(2), 3u);
}

TEST(Perm, CompositionIsRightToLeft) {
  const Perm a = Perm::cycle(3, {1, 2});
  const Perm b = Perm::cycle(3, {2, 3});
  for (std::uint32_t i = 0; i < 3; ++i) EXPECT_EQ((a * b)(i), a(b(i)));
}

TEST(Perm, Parity) {
  EXPECT_TRUE(Perm::identity(4).is_even());
  EXPECT_EQ(Perm::transposition(4, 1, 2).parity(), Parity::Odd);
  EXPECT_TRUE(Perm::cycle(5, {1, 2, 3}).is_even());
  EXPECT_EQ(Perm::transposition(3, 1, 3) * Perm::transposition(3, 1, 2), Perm::cycle(3, {1, 2, 3}));
}

TEST(Perm, ParseAndPrint) {
  EXPECT_EQ(Perm::parse("(1 2 3)(4 5)", 5).to_string(), "(1 2 3)(4 5)");
  EXPECT_EQ(Perm::parse("()", 3), Perm::identity(3));
  EXPECT_EQ(Perm::identity(3).to_string(), "()");
  EXPECT_THROW(Perm::parse("(1 6)", 5), ParseError);
  EXPECT_THROW(Perm::parse("(1 2", 5), ParseError);
  EXPECT_THROW(Perm::parse("(1 1)", 5), ParseError);
}

TEST(Perm, MismatchedDegrees) {
  EXPECT_THROW(compose(Perm::identity(3), Perm::identity(4)), Mismatch);
}

TEST(Perm, OrderInversePow) {
  const Perm c = Perm::parse("(1 2 3)(4 5)", 5);
  EXPECT_EQ(c.order(), 6u);
  EXPECT_TRUE(c.pow(6).is_identity());
  EXPECT_EQ(c.pow(-1), c.inverse());
  EXPECT_TRUE((c * c.inverse()).is_identity());
}

TEST(PermProperty, ParityIsAHomomorphism) {
  test::Gen g(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 7));
    Perm a = g.perm(n), b = g.perm(n);
    EXPECT_EQ((a * b).is_even(), a.is_even() == b.is_even());
  }
}

TEST(PermProperty, PairIdentitiesExhaustive) {
  const std::size_t n = 6;
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = 1; j <= n; ++j)
      for (std::uint32_t k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        EXPECT_EQ(Perm::transposition(n, i, j) * Perm::transposition(n, j, k), Perm::cycle(n, {i, j, k}));
        for (std::uint32_t l = 1; l <= n; ++l) {
          if (l == i || l == j || l == k) continue;
          EXPECT_EQ(Perm::transposition(n, i, j) * Perm::transposition(n, k, l),
                    Perm::cycle(n, {i, j, k}) * Perm::cycle(n, {j, k, l}))
              << i << j << k << l;
        }
      }
}

}  // namespace
}  // namespace radix
