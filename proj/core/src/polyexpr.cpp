#include "radix/polyexpr.hpp"

#include <cctype>

#include "radix/error.hpp"

namespace radix {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ExprScope& scope, std::size_t line, std::size_t column)
      : text_(text), scope_(scope), line_(line), column_(column) {}

  RatFunc run() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    RatFunc out = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(line_, column_ + pos, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned long small_int(std::size_t limit, const char* what) {
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.size() > 9 || std::stoul(d) > limit) fail_at(start, std::string(what) + " " + d + " is too large");
    return std::stoul(d);
  }

  RatFunc expr() {
    RatFunc acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RatFunc d = unary();
        if (d.is_zero()) fail_at(at, "division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFunc power() {
    const std::size_t at = pos_;
    RatFunc base = atom();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip_space();
    const long e = static_cast<long>(small_int(scope_.max_degree, "exponent"));
    const std::uint32_t deg = std::max(base.num().total_degree(), base.den().total_degree());
    if (static_cast<unsigned long>(deg) * static_cast<unsigned long>(e) > scope_.max_degree)
      fail_at(at, "power exceeds the degree cap " + std::to_string(scope_.max_degree));
    if (negative && base.is_zero()) fail_at(at, "zero to a negative power");
    return base.pow(negative ? -e : e);
  }

  RatFunc atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string d = digits();
      return RatFunc::constant(scope_.nvars, CycScalar(Rational(mpz_class(d))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    fail(std::string("unexpected '") + c + "'");
  }

  RatFunc name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string word(text_.substr(start, pos_ - start));
    const bool has_index = pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    if (word == "i" && !has_index) return RatFunc::constant(scope_.nvars, root_of_unity(4));
    if (word == "w" && !has_index) {
      expect('(');
      skip_space();
      const auto q = static_cast<std::uint32_t>(small_int(1000, "root order"));
      if (q == 0) fail("w(0) is not a root of unity");
      expect(')');
      return RatFunc::constant(scope_.nvars, root_of_unity(q));
    }
    if (!has_index) fail_at(start, "unknown name '" + word + "'");
    const std::string d = digits();
    for (const auto& b : scope_.blocks) {
      if (b.prefix != word) continue;
      if (d.size() > 6) break;
      const std::size_t idx = std::stoul(d);
      if (idx < b.first_index || idx >= b.first_index + b.count) break;
      return RatFunc(MPoly::variable(scope_.nvars, b.offset + idx - b.first_index));
    }
    fail_at(start, "variable " + word + d + " is not available here");
  }

  std::string_view text_;
  const ExprScope& scope_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, const ExprScope& scope, std::size_t line, std::size_t column) {
  return Parser(text, scope, line, column).run();
}

MPoly parse_poly(std::string_view text, const ExprScope& scope, std::size_t line, std::size_t column) {
  const RatFunc f = parse_ratfunc(text, scope, line, column);
  auto p = f.as_polynomial();
  if (!p) throw ParseError(line, column, "expected a polynomial; the denominator " + f.den().to_string(scope_names(scope)) + " is not constant");
  return *p;
}

VarNamer scope_names(const ExprScope& scope) {
  return [scope](std::size_t i) -> std::string {
    for (const auto& b : scope.blocks)
      if (i >= b.offset && i < b.offset + b.count) return b.prefix + std::to_string(i - b.offset + b.first_index);
    return "v" + std::to_string(i + 1);
  };
}

}  // namespace radix
