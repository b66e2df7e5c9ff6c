#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radix/formula.hpp"
#include "radix/permchar.hpp"

namespace radix {

// Outcome of pushing even-symmetry from f^q down to f.
struct SymmetryVerdict {
  std::size_t n = 0;
  std::uint32_t q = 0;
  // True when f is even-symmetric (a certificate); false gives a counterexample.
  bool even_symmetric = false;
  std::optional<Character> character;        // absent for n < 3
  std::optional<HomTrivialityReport> hom;    // n >= 5 only
  bool direct_check = false;                 // is_even_symmetric(f)

  // The character route and the direct check say the same thing.
  bool consistent() const { return even_symmetric == direct_check; }
  std::string to_text() const;
};

// Requires f != 0, q prime and f^q even-symmetric. For n >= 5 the verdict is
// always a certificate: chi is trivial on A_n.
SymmetryVerdict keeping_symmetry(const MPoly& f, std::uint32_t q);

struct LevelEntry {
  std::size_t level = 0;
  IdentityCheck chain;               // f_j^k_j = p_{j-1}(sigma, f)
  bool base_even_symmetric = false;  // p_{j-1}(sigma, f) checked directly
  std::optional<SymmetryVerdict> witness;
};

struct ObstructionReport {
  enum class Outcome { FailedIdentity, Contradiction };

  std::size_t n = 0;
  std::size_t s = 0;
  std::vector<std::string> notes;
  std::vector<LevelEntry> levels;
  // Present iff every chain identity held; it then fails by even-symmetry.
  std::optional<IdentityCheck> final_identity;
  Outcome outcome = Outcome::FailedIdentity;
  // 1..s for a chain identity, s + 1 for the final identity.
  std::size_t failed_at = 0;
  std::string conclusion;

  std::string to_text() const;
};

// The even-symmetry induction over a candidate formula with n >= 5. Ends in a
// pinpointed failed identity or in the contradiction that x1 would be
// even-symmetric. Throws DomainError for n < 5.
ObstructionReport run_ruffini(const PolyRadicalFormula& f);

}  // namespace radix
