#include "radix/obstruction.hpp"

#include <sstream>

#include "radix/error.hpp"

namespace radix {

std::string SymmetryVerdict::to_text() const {
  std::ostringstream os;
  os << "keeping-symmetry n=" << n << " q=" << q << "\n";
  if (character)
    for (const auto& line : character->render()) os << "  chi " << line << "\n";
  if (hom) os << "  hom-trivial " << (hom->verdict == HomTrivialityReport::Verdict::Trivial ? "yes" : "no") << "\n";
  os << "  direct " << (direct_check ? "even-symmetric" : "not even-symmetric") << "\n";
  os << "verdict " << (even_symmetric ? "CERTIFICATE" : "COUNTEREXAMPLE") << "\n";
  return os.str();
}

SymmetryVerdict keeping_symmetry(const MPoly& f, std::uint32_t q) {
  if (f.is_zero()) throw DomainError("keeping_symmetry needs a nonzero polynomial");
  if (!is_prime(q)) throw DomainError("exponent " + std::to_string(q) + " is not prime");
  if (!power_is_even_symmetric(f, q))
    throw NotSymmetric("f^" + std::to_string(q) + " is not even-symmetric");
  SymmetryVerdict out;
  out.n = f.nvars();
  out.q = q;
  out.direct_check = is_even_symmetric(f);
  if (out.n < 3) {
    // A_1 and A_2 are trivial.
    out.even_symmetric = true;
    return out;
  }
  out.character = make_character(f, q);
  if (out.n >= 5) {
    out.hom = verify_hom_trivial(out.n, q);
    if (out.hom->verdict != HomTrivialityReport::Verdict::Trivial)
      throw std::logic_error("homomorphism triviality failed for n >= 5");
    if (!out.character->is_trivial())
      throw std::logic_error("nontrivial character although every homomorphism A_n -> Z_q is trivial");
    out.even_symmetric = true;
  } else {
    out.even_symmetric = out.character->is_trivial();
  }
  return out;
}

std::string ObstructionReport::to_text() const {
  std::ostringstream os;
  os << "obstruct n=" << n << " s=" << s << "\n";
  for (const auto& note : notes) os << "note " << note << "\n";
  for (const auto& e : levels) {
    os << "level " << e.level << "\n";
    os << "  " << render_line(e.chain) << "\n";
    if (!e.chain.pass) continue;
    os << "  base p" << e.level - 1 << "(s, f) " << (e.base_even_symmetric ? "even-symmetric" : "NOT even-symmetric")
       << "\n";
    if (e.witness) {
      os << "  witness f" << e.level << " " << (e.witness->even_symmetric ? "even-symmetric" : "NOT even-symmetric");
      if (e.witness->character) os << " ; chi " << (e.witness->character->is_trivial() ? "trivial" : "nontrivial");
      if (e.witness->hom) os << " ; A_" << n << " -> Z_" << e.witness->q << " trivial";
      os << "\n";
    } else {
      os << "  witness f" << e.level << " is zero, even-symmetric\n";
    }
  }
  if (final_identity) os << "final\n  " << render_line(*final_identity) << "\n";
  os << "outcome " << (outcome == Outcome::Contradiction ? "CONTRADICTION" : "FAILED-IDENTITY");
  if (outcome == Outcome::FailedIdentity) os << " at " << (failed_at > s ? "final identity" : "level " + std::to_string(failed_at));
  os << "\n";
  os << "conclusion " << conclusion << "\n";
  return os.str();
}

ObstructionReport run_ruffini(const PolyRadicalFormula& input) {
  validate(input);
  if (input.n < 5)
    throw DomainError("the obstruction needs n >= 5; for n = " + std::to_string(input.n) +
                      " formulas exist, see `builtin degree2` and `builtin degree3`");
  ObstructionReport report;
  PolyRadicalFormula f = input;
  bool composite = false;
  for (auto k : f.ks) composite = composite || !is_prime(k);
  if (composite) {
    f = factor_radicals(input);
    report.notes.push_back("composite exponents factored into prime radicals");
  }
  report.n = f.n;
  report.s = f.s();

  std::vector<MPoly> images;
  for (std::size_t i = 1; i <= f.n; ++i) images.push_back(elem_sym(f.n, i));
  for (std::size_t j = 1; j <= f.s(); ++j) {
    LevelEntry entry;
    entry.level = j;
    const std::uint32_t k = f.ks[j - 1];
    const MPoly& w = f.witnesses[j - 1];
    const MPoly base = substitute(f.ps[j - 1], images);
    const MPoly diff = base - w.pow(k);
    entry.chain = {"f" + std::to_string(j) + "^" + std::to_string(k) + " = p" + std::to_string(j - 1) + "(s, f)",
                   diff.is_zero(), diff.is_zero() ? "" : describe_difference(diff)};
    if (!entry.chain.pass) {
      report.levels.push_back(std::move(entry));
      report.outcome = ObstructionReport::Outcome::FailedIdentity;
      report.failed_at = j;
      report.conclusion = "the candidate is not a radical formula: identity at level " + std::to_string(j) + " fails";
      return report;
    }
    // Symmetric in sigma, even-symmetric in the witnesses below j.
    entry.base_even_symmetric = is_even_symmetric(base);
    if (!entry.base_even_symmetric)
      throw std::logic_error("induction broke: p_" + std::to_string(j - 1) + " is not even-symmetric");
    if (!w.is_zero()) {
      entry.witness = keeping_symmetry(w, k);
      if (!entry.witness->consistent())
        throw std::logic_error("character route and direct check disagree at level " + std::to_string(j));
    }
    report.levels.push_back(std::move(entry));
    images.push_back(w);
  }
  const MPoly rhs = substitute(f.ps.back(), images);
  const MPoly x1 = MPoly::variable(f.n, 0);
  const MPoly diff = rhs - x1;
  report.final_identity = IdentityCheck{"x1 = p" + std::to_string(f.s()) + "(s, f)", diff.is_zero(),
                                        diff.is_zero() ? "" : describe_difference(diff)};
  report.failed_at = f.s() + 1;
  const Perm alpha = Perm::cycle(f.n, {1, 2, 3});
  const MPoly moved = permute_vars(x1, alpha);
  if (!is_even_symmetric(rhs) || report.final_identity->pass)
    throw std::logic_error("induction broke at the final identity");
  report.outcome = ObstructionReport::Outcome::Contradiction;
  report.conclusion = "p" + std::to_string(f.s()) + "(s, f) is even-symmetric, so x1 = p" + std::to_string(f.s()) +
                      " would make x1 even-symmetric; but " + alpha.to_string() + " carries x1 to " +
                      moved.to_string() + " != x1";
  return report;
}

}  // namespace radix
