#include "cli.hpp"

#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "radix/dsl.hpp"
#include "radix/error.hpp"
#include "radix/obstruction.hpp"
#include "radix/polyexpr.hpp"
#include "radix/resolvent.hpp"

namespace radix::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document load(const CliConfig& cfg) {
  if (cfg.inputs.size() != 1) throw Error(cfg.command + " takes exactly one input file");
  return parse_document(read_file(cfg.inputs[0]), ParseOptions{cfg.max_degree});
}

// Largest index k of a variable xk in the text.
std::size_t infer_n(const std::string& text) {
  static const std::regex var(R"(x(\d+))");
  std::size_t n = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), var); it != std::sregex_iterator(); ++it)
    n = std::max<std::size_t>(n, std::stoul((*it)[1].str()));
  return n;
}

MPoly parse_x_poly(const CliConfig& cfg, const std::string& text) {
  const std::size_t n = cfg.n ? cfg.n : infer_n(text);
  if (n == 0) throw Error("cannot infer the number of variables; pass --n");
  ExprScope scope;
  scope.nvars = n;
  scope.max_degree = cfg.max_degree;
  scope.blocks = {{"x", 0, n, 1}};
  return parse_poly(text, scope);
}

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = n; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(images[i - 1], images[pick(rng)]);
  }
  return Perm(images);
}

// x_{alpha(1)} = p_s(sigma, f o alpha) for a passing formula.
std::vector<IdentityCheck> relabel_checks(const PolyRadicalFormula& f, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MPoly> images;
  for (std::size_t i = 1; i <= f.n; ++i) images.push_back(elem_sym(f.n, i));
  std::vector<IdentityCheck> out;
  for (std::size_t t = 0; t < samples; ++t) {
    const Perm alpha = random_perm(f.n, rng);
    std::vector<MPoly> moved = images;
    for (const auto& w : f.witnesses) moved.push_back(permute_vars(w, alpha));
    const MPoly rhs = substitute(f.ps.back(), moved);
    const MPoly lhs = permute_vars(MPoly::variable(f.n, 0), alpha);
    out.push_back({"relabel " + alpha.to_string() + ": " + lhs.to_string() + " = p" + std::to_string(f.s()) +
                       "(s, f o alpha)",
                   lhs == rhs, ""});
  }
  return out;
}

}  // namespace

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const Document doc = load(cfg);
  VerificationReport report = verify_document(doc);
  if (report.valid() && cfg.samples > 0) {
    std::optional<PolyRadicalFormula> poly;
    if (const auto* p = std::get_if<PolyRadicalFormula>(&doc)) poly = *p;
    if (const auto* s = std::get_if<SolvabilityScheme>(&doc); s && s->s() == s->witnesses.size()) poly = vieta_poly(*s);
    if (const auto* t = std::get_if<FormalRadicalFormula>(&doc)) {
      try {
        poly = to_poly_formula(*t);
      } catch (const DomainError&) {
      }
    }
    if (poly && poly->n >= 2)
      for (auto& c : relabel_checks(*poly, cfg.samples, cfg.seed)) report.checks.push_back(std::move(c));
  }
  out << report.to_text();
  return report.valid() ? kOk : kFailed;
}

int cmd_obstruct(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const Document doc = load(cfg);
  PolyRadicalFormula f;
  if (const auto* p = std::get_if<PolyRadicalFormula>(&doc)) {
    f = *p;
  } else if (const auto* s = std::get_if<SolvabilityScheme>(&doc)) {
    f = vieta_poly(*s);
  } else {
    f = to_poly_formula(std::get<FormalRadicalFormula>(doc));
  }
  if (f.n < 5) {
    err << "obstruct: refused for n = " << f.n
        << "; the obstruction needs n >= 5. Formulas exist below that, see `builtin degree2` and `builtin degree3`.\n";
    return kRefused;
  }
  out << run_ruffini(f).to_text();
  return kOk;
}

int cmd_character(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.inputs.size() != 1) throw Error("character takes one polynomial expression");
  const MPoly f = parse_x_poly(cfg, cfg.inputs[0]);
  std::vector<Perm> perms;
  for (const auto& text : cfg.perms) perms.push_back(Perm::parse(text, f.nvars()));
  if (perms.empty()) perms = an_generators(f.nvars());
  const Character chi = make_character(f, cfg.q, perms);
  out << "character n=" << f.nvars() << " q=" << cfg.q << " f = " << f.to_string() << "\n";
  for (const auto& line : chi.render()) out << line << "\n";
  out << (chi.is_trivial() ? "trivial" : "nontrivial") << "\n";
  return kOk;
}

int cmd_symmetrize(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.inputs.size() != 1) throw Error("symmetrize takes one polynomial expression");
  const MPoly f = parse_x_poly(cfg, cfg.inputs[0]);
  out << symmetrize(f).to_string(indexed_names("s")) << "\n";
  return kOk;
}

int cmd_abelize(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const Document doc = load(cfg);
  FormalRadicalFormula f = [&] {
    if (const auto* t = std::get_if<FormalRadicalFormula>(&doc)) return *t;
    if (const auto* p = std::get_if<PolyRadicalFormula>(&doc)) return to_tower(*p);
    return vieta_convert(std::get<SolvabilityScheme>(doc));
  }();
  const AbelReport report = abel_polynomialize(f);
  std::istringstream lines(report.to_text());
  for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
  if (report.poly) {
    out << serialize(*report.poly);
    return verify_poly_formula(*report.poly).valid() ? kOk : kFailed;
  }
  out << serialize(report.result);
  return verify_formal_formula(report.result).valid() ? kOk : kFailed;
}

int cmd_builtin(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.inputs.size() != 1) throw Error("builtin takes a name: degree2 or degree3");
  const auto which = builtin_from_name(cfg.inputs[0]);
  if (!which) throw Error("unknown builtin '" + cfg.inputs[0] + "'; expected degree2 or degree3");
  out << serialize(builtin(*which));
  return kOk;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (cfg.output) {
    file.open(*cfg.output);
    if (!file) {
      err << "cannot write " << *cfg.output << "\n";
      return kBadInput;
    }
    sink = &file;
  }
  try {
    if (cfg.command == "verify") return cmd_verify(cfg, *sink, err);
    if (cfg.command == "obstruct") return cmd_obstruct(cfg, *sink, err);
    if (cfg.command == "character") return cmd_character(cfg, *sink, err);
    if (cfg.command == "symmetrize") return cmd_symmetrize(cfg, *sink, err);
    if (cfg.command == "abelize") return cmd_abelize(cfg, *sink, err);
    if (cfg.command == "builtin") return cmd_builtin(cfg, *sink, err);
    err << "unknown command '" << cfg.command << "'\n";
    return kBadInput;
  } catch (const ParseError& e) {
    const std::string where = cfg.inputs.empty() ? "" : cfg.inputs[0] + ":";
    err << where << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    err << cfg.command << ": " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace radix::cli
