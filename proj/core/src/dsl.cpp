#include "radix/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "radix/error.hpp"
#include "radix/permchar.hpp"
#include "radix/polyexpr.hpp"

namespace radix {

namespace {

enum class Kind { Scheme, Poly, Tower };

struct Located {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Word {
  std::string text;
  std::size_t column = 0;  // 1-based
};

std::vector<Word> split_words(std::string_view line) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::size_t parse_count(const Word& w, std::size_t line, const char* what) {
  if (w.text.empty() || w.text.size() > 6 ||
      !std::all_of(w.text.begin(), w.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(line, w.column, std::string("expected a non-negative integer for ") + what);
  return std::stoul(w.text);
}

ExprScope scope_for(Kind kind, std::size_t n, std::size_t radicals, std::uint32_t max_degree) {
  ExprScope scope;
  scope.nvars = n + radicals;
  scope.max_degree = max_degree;
  switch (kind) {
    case Kind::Scheme:
      scope.blocks = {{"a", 0, n, 0}, {"z", n, radicals, 1}};
      break;
    case Kind::Poly:
      scope.blocks = {{"s", 0, n, 1}, {"f", n, radicals, 1}};
      break;
    case Kind::Tower:
      scope.blocks = {{"s", 0, n, 1}, {"y", n, radicals, 1}};
      break;
  }
  return scope;
}

ExprScope witness_scope(std::size_t n, std::uint32_t max_degree) {
  ExprScope scope;
  scope.nvars = n;
  scope.max_degree = max_degree;
  scope.blocks = {{"x", 0, n, 1}};
  return scope;
}

class DocumentParser {
 public:
  DocumentParser(std::string_view text, const ParseOptions& options) : options_(options) {
    std::size_t start = 0;
    for (std::size_t lineno = 1; start <= text.size(); ++lineno) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines_.emplace_back(lineno, std::string(line));
      start = end + 1;
    }
  }

  Document run() {
    std::size_t i = 0;
    while (i < lines_.size() && split_words(lines_[i].second).empty()) ++i;
    if (i == lines_.size()) throw ParseError(1, 1, "empty document; expected a header");
    header(lines_[i].first, lines_[i].second);
    for (++i; i < lines_.size(); ++i) body_line(lines_[i].first, lines_[i].second);
    switch (kind_) {
      case Kind::Scheme: return build_scheme();
      case Kind::Poly: return build_poly();
      case Kind::Tower: return build_tower();
    }
    throw std::logic_error("unreachable");
  }

 private:
  void header(std::size_t line, const std::string& text) {
    const auto words = split_words(text);
    header_line_ = line;
    if (words[0].text == "scheme")
      kind_ = Kind::Scheme;
    else if (words[0].text == "polyformula")
      kind_ = Kind::Poly;
    else if (words[0].text == "towerformula")
      kind_ = Kind::Tower;
    else
      throw ParseError(line, words[0].column, "expected a header: scheme, polyformula or towerformula");
    bool have_n = false, have_s = false;
    for (std::size_t w = 1; w < words.size(); ++w) {
      const auto& word = words[w];
      if (word.text.rfind("n=", 0) == 0 && !have_n) {
        n_ = parse_count({word.text.substr(2), word.column + 2}, line, "n");
        have_n = true;
      } else if (word.text.rfind("s=", 0) == 0 && !have_s) {
        s_ = parse_count({word.text.substr(2), word.column + 2}, line, "s");
        have_s = true;
      } else {
        throw ParseError(line, word.column, "unexpected '" + word.text + "' in header");
      }
    }
    if (!have_n || !have_s) throw ParseError(line, 1, "header needs n=INT and s=INT");
    if (n_ == 0) throw ParseError(line, words[0].column, "degree n=0 is degenerate");
    if (n_ > 64) throw ParseError(line, words[0].column, "degree n is too large");
    if (s_ > 64) throw ParseError(line, words[0].column, "radical count s is too large");
  }

  void body_line(std::size_t line, const std::string& text) {
    const auto words = split_words(text);
    if (words.empty()) return;
    const std::string& head = words[0].text;
    if (head == "k") {
      if (have_ks_) throw ParseError(line, words[0].column, "duplicate k line");
      have_ks_ = true;
      if (words.size() - 1 != s_)
        throw ParseError(line, words[0].column,
                         "expected " + std::to_string(s_) + " exponents, got " + std::to_string(words.size() - 1));
      for (std::size_t w = 1; w < words.size(); ++w) {
        const std::size_t k = parse_count(words[w], line, "k");
        if (k == 0) throw ParseError(line, words[w].column, "radical exponent 0 is not allowed");
        if (k > 1000) throw ParseError(line, words[w].column, "radical exponent is too large");
        if (kind_ == Kind::Tower && !is_prime(k))
          throw ParseError(line, words[w].column, "k_" + std::to_string(w) + " = " + std::to_string(k) +
                                                      " is not prime; tower levels need prime exponents");
        ks_.push_back(static_cast<std::uint32_t>(k));
      }
      return;
    }
    if (head == "assert-nonpower") {
      if (kind_ != Kind::Tower) throw ParseError(line, words[0].column, "assert-nonpower applies to towers only");
      if (words.size() != 2) throw ParseError(line, words[0].column, "expected assert-nonpower LEVEL");
      const std::size_t j = parse_count(words[1], line, "level");
      if (j < 1 || j > s_) throw ParseError(line, words[1].column, "no level " + std::to_string(j));
      asserted_.resize(s_, false);
      asserted_[j - 1] = true;
      return;
    }
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(line, words[0].column, "unknown line '" + head + "'");
    const auto lhs = split_words(std::string_view(text).substr(0, eq));
    Located rhs{text.substr(eq + 1), line, eq + 2};
    if (lhs.empty()) throw ParseError(line, 1, "missing name before '='");
    if (lhs.size() == 1 && lhs[0].text.size() > 1 && lhs[0].text[0] == 'p') {
      const std::size_t j = parse_count({lhs[0].text.substr(1), lhs[0].column + 1}, line, "p index");
      const std::size_t last = kind_ == Kind::Tower ? s_ - (s_ > 0 ? 1 : 0) : s_;
      if (j > last || (kind_ == Kind::Tower && s_ == 0))
        throw ParseError(line, lhs[0].column,
                         kind_ == Kind::Tower ? "towers give p0..p(s-1); use 'target =' for p_s"
                                              : "p index " + std::to_string(j) + " exceeds s");
      if (!ps_.emplace(j, rhs).second) throw ParseError(line, lhs[0].column, "duplicate p" + std::to_string(j));
      return;
    }
    if (lhs.size() == 2 && lhs[0].text == "witness") {
      const std::size_t j = parse_count(lhs[1], line, "witness index");
      if (j < 1 || j > s_) throw ParseError(line, lhs[1].column, "no radical " + std::to_string(j));
      if (!witnesses_.emplace(j, rhs).second) throw ParseError(line, lhs[0].column, "duplicate witness " + std::to_string(j));
      return;
    }
    if (lhs.size() == 1 && lhs[0].text == "target") {
      if (kind_ != Kind::Tower) throw ParseError(line, lhs[0].column, "target applies to towers; use p" + std::to_string(s_));
      if (target_) throw ParseError(line, lhs[0].column, "duplicate target");
      target_ = rhs;
      return;
    }
    throw ParseError(line, words[0].column, "unknown line '" + head + "'");
  }

  void require_ks() const {
    if (!have_ks_ && s_ > 0) throw ParseError(header_line_, 1, "missing k line");
  }

  const Located& p_text(std::size_t j) const {
    auto it = ps_.find(j);
    if (it == ps_.end()) throw ParseError(header_line_, 1, "missing p" + std::to_string(j));
    return it->second;
  }

  MPoly poly_at(const Located& src, const ExprScope& scope) const {
    return parse_poly(src.text, scope, src.line, src.column);
  }

  std::vector<std::optional<MPoly>> witnesses() const {
    std::vector<std::optional<MPoly>> out(s_);
    const ExprScope scope = witness_scope(n_, options_.max_degree);
    for (const auto& [j, src] : witnesses_) out[j - 1] = poly_at(src, scope);
    return out;
  }

  Document build_scheme() const {
    require_ks();
    SolvabilityScheme f;
    f.n = n_;
    f.ks = ks_;
    for (std::size_t j = 0; j <= s_; ++j) f.ps.push_back(poly_at(p_text(j), scope_for(Kind::Scheme, n_, j, options_.max_degree)));
    f.witnesses = witnesses();
    validate(f);
    return f;
  }

  Document build_poly() const {
    require_ks();
    PolyRadicalFormula f;
    f.n = n_;
    f.ks = ks_;
    for (std::size_t j = 0; j <= s_; ++j) f.ps.push_back(poly_at(p_text(j), scope_for(Kind::Poly, n_, j, options_.max_degree)));
    for (auto& w : witnesses()) {
      if (!w) {
        const std::size_t j = f.witnesses.size() + 1;
        throw ParseError(header_line_, 1, "missing witness " + std::to_string(j) + "; polynomial formulas need every witness");
      }
      f.witnesses.push_back(std::move(*w));
    }
    validate(f);
    return f;
  }

  Document build_tower() const {
    require_ks();
    if (!target_) throw ParseError(header_line_, 1, "missing target");
    Tower tower(TowerSpec{n_, {}, {}, {}});
    auto element = [&](const Located& src, std::size_t level) {
      const RatFunc f = parse_ratfunc(src.text, scope_for(Kind::Tower, n_, level, options_.max_degree), src.line, src.column);
      try {
        return tower.from_ratfunc(f, level);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(src.line, src.column, e.what());
      }
    };
    for (std::size_t j = 0; j < s_; ++j) {
      const TowerElem pj = element(p_text(j), j);
      const bool user = j < asserted_.size() && asserted_[j];
      tower = tower.extended(ks_[j], pj, user ? Attestation::Asserted : Attestation::Unknown);
      if (!user && nonpower_check(tower, j + 1).verdict == NonpowerResult::Verdict::Verified)
        tower = tower.with_attestation(j + 1, Attestation::Verified);
    }
    TowerElem target = element(*target_, s_);
    return FormalRadicalFormula{std::move(tower), std::move(target), witnesses()};
  }

  ParseOptions options_;
  std::vector<std::pair<std::size_t, std::string>> lines_;
  Kind kind_ = Kind::Poly;
  std::size_t header_line_ = 1;
  std::size_t n_ = 0;
  std::size_t s_ = 0;
  bool have_ks_ = false;
  std::vector<std::uint32_t> ks_;
  std::map<std::size_t, Located> ps_;
  std::map<std::size_t, Located> witnesses_;
  std::optional<Located> target_;
  std::vector<bool> asserted_;
};

void write_ks(std::ostream& os, const std::vector<std::uint32_t>& ks) {
  if (ks.empty()) return;
  os << "k";
  for (auto k : ks) os << ' ' << k;
  os << "\n";
}

void write_witnesses(std::ostream& os, const std::vector<std::optional<MPoly>>& ws) {
  for (std::size_t j = 0; j < ws.size(); ++j)
    if (ws[j]) os << "witness " << j + 1 << " = " << ws[j]->to_string(indexed_names("x")) << "\n";
}

}  // namespace

Document parse_document(std::string_view text, const ParseOptions& options) {
  return DocumentParser(text, options).run();
}

std::string serialize(const SolvabilityScheme& f) {
  std::ostringstream os;
  os << "scheme n=" << f.n << " s=" << f.s() << "\n";
  write_ks(os, f.ks);
  for (std::size_t j = 0; j < f.ps.size(); ++j)
    os << "p" << j << " = " << f.ps[j].to_string(scope_names(scope_for(Kind::Scheme, f.n, j, 0))) << "\n";
  write_witnesses(os, f.witnesses);
  return os.str();
}

std::string serialize(const PolyRadicalFormula& f) {
  std::ostringstream os;
  os << "polyformula n=" << f.n << " s=" << f.s() << "\n";
  write_ks(os, f.ks);
  for (std::size_t j = 0; j < f.ps.size(); ++j)
    os << "p" << j << " = " << f.ps[j].to_string(scope_names(scope_for(Kind::Poly, f.n, j, 0))) << "\n";
  write_witnesses(os, {f.witnesses.begin(), f.witnesses.end()});
  return os.str();
}

std::string serialize(const FormalRadicalFormula& f) {
  std::ostringstream os;
  os << "towerformula n=" << f.n() << " s=" << f.s() << "\n";
  write_ks(os, f.tower.spec().ks);
  for (std::size_t j = 0; j < f.s(); ++j) os << "p" << j << " = " << f.tower.to_string(f.tower.p(j)) << "\n";
  os << "target = " << f.tower.to_string(f.target) << "\n";
  for (std::size_t j = 1; j <= f.s(); ++j)
    if (f.tower.attestation(j) == Attestation::Asserted) os << "assert-nonpower " << j << "\n";
  write_witnesses(os, f.witnesses);
  return os.str();
}

std::string serialize(const Document& d) {
  return std::visit([](const auto& f) { return serialize(f); }, d);
}

}  // namespace radix
