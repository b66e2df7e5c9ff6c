#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radix/cyclotomic.hpp"
#include "radix/multipoly.hpp"
#include "radix/perm.hpp"
#include "radix/report.hpp"

namespace radix {

bool is_prime(std::uint64_t n);
std::uint64_t factorial(std::size_t n);

// {(1 2 m) : 3 <= m <= n}. Throws DomainError for n < 3.
std::vector<Perm> an_generators(std::size_t n);

// Group generated by gens, sorted. Throws DomainError past cap elements.
std::vector<Perm> group_closure(const std::vector<Perm>& gens, std::size_t cap = 10000);

// Subgroup generated by all commutators g h g^-1 h^-1 of the group generated
// by gens, sorted.
std::vector<Perm> commutator_closure(const std::vector<Perm>& gens, std::size_t cap = 10000);

// Whether f^q is even-symmetric, decided without expanding the power: in a
// domain f^q(x_g) = f^q iff f(x_g) = c f for a q-th root of unity c.
bool power_is_even_symmetric(const MPoly& f, std::uint32_t q);

// chi(alpha): the unique q-th root of unity with f = chi * f(x_alpha).
// Requires f != 0, alpha even and f^q even-symmetric.
CycScalar character_of(const MPoly& f, std::uint32_t q, const Perm& alpha);

// Character A_n -> Z_q of a polynomial, recorded on a generating set.
struct Character {
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::vector<std::pair<Perm, CycScalar>> values;
  MPoly source;

  bool is_trivial() const;
  // The value at a recorded generator, if present.
  std::optional<CycScalar> at(const Perm& alpha) const;
  // "(1 2 3) -> w(3)^1" style lines.
  std::vector<std::string> render() const;
};

// Character of f on the given generators. The homomorphism law
// chi(gh) = chi(g) chi(h) is checked on every ordered pair of generators.
Character make_character(const MPoly& f, std::uint32_t q, const std::vector<Perm>& gens);
inline Character make_character(const MPoly& f, std::uint32_t q) {
  return make_character(f, q, an_generators(f.nvars()));
}

// "w(q)^m" for a q-th root of unity.
std::string render_root_of_unity(const CycScalar& c, std::uint32_t q);

// Certificate that every homomorphism A_n -> Z_q is trivial, or (n = 3, 4,
// q = 3) a polynomial whose character is not.
struct HomTrivialityReport {
  enum class Verdict { Trivial, Counterexample };

  std::size_t n = 0;
  std::uint32_t q = 0;
  Verdict verdict = Verdict::Trivial;
  // Route through the 3-cycle (or, for q = 3, 5-cycle) identities.
  std::vector<IdentityCheck> generator_route;
  bool generator_route_applies = false;
  // Route through perfectness of A_n (commutator closure equals the group).
  std::vector<IdentityCheck> oracle_route;
  bool oracle_route_run = false;
  std::size_t group_order = 0;
  std::size_t derived_order = 0;
  std::optional<Character> counterexample;

  bool routes_agree() const;
  std::string to_text() const;
};

// n >= 5: both routes. n = 3, 4: the oracle route only, plus an explicit
// counterexample character when q divides the abelianization order (3).
// Throws DomainError for n < 3 or q not prime.
HomTrivialityReport verify_hom_trivial(std::size_t n, std::uint32_t q);

// Polynomials with a nontrivial Z_3 character: the Lagrange resolvent
// x1 + e3 x2 + e3^2 x3 for n = 3, and the same resolvent of the three
// products x1x2+x3x4, x1x3+x2x4, x1x4+x2x3 for n = 4.
MPoly small_degree_resolvent(std::size_t n);

}  // namespace radix
