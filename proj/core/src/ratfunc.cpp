#include "radix/ratfunc.hpp"

#include <algorithm>

#include "radix/error.hpp"

namespace radix {

namespace {

MPoly one_poly(std::size_t nvars) { return MPoly::constant(nvars, CycScalar(1L)); }

}  // namespace

RatFunc::RatFunc(std::size_t nvars) : num_(nvars), den_(one_poly(nvars)) {}

RatFunc::RatFunc(MPoly num) : num_(std::move(num)), den_(one_poly(num_.nvars())) {}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(one_poly(num_.nvars())) {
  if (num_.nvars() != den.nvars()) throw Mismatch("numerator and denominator in different variable counts");
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) return;
  if (auto c = den.constant_value()) {
    num_ *= c->inverse();
    return;
  }
  const CycScalar inv = den.leading_term().second.inverse();
  num_ *= inv;
  den *= inv;
  factors_.push_back({std::move(den), 1});
  cancel();
  rebuild_den();
}

RatFunc RatFunc::constant(std::size_t nvars, const CycScalar& c) { return RatFunc(MPoly::constant(nvars, c)); }

void RatFunc::cancel() {
  if (num_.is_zero()) {
    factors_.clear();
    return;
  }
  for (auto& f : factors_) {
    while (f.mult > 0 && f.poly.total_degree() <= num_.total_degree()) {
      auto q = exact_divide(num_, f.poly);
      if (!q) break;
      num_ = std::move(*q);
      --f.mult;
    }
  }
  std::erase_if(factors_, [](const Factor& f) { return f.mult == 0; });
}

void RatFunc::rebuild_den() {
  den_ = one_poly(num_.nvars());
  for (const auto& f : factors_) den_ *= f.poly.pow(f.mult);
}

std::vector<RatFunc::Factor> RatFunc::lcm(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  std::vector<Factor> out = a;
  for (const auto& f : b) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Factor& g) { return g.poly == f.poly; });
    if (it == out.end())
      out.push_back(f);
    else
      it->mult = std::max(it->mult, f.mult);
  }
  return out;
}

void RatFunc::raise_to(const std::vector<Factor>& target) {
  for (const auto& f : target) {
    auto it = std::find_if(factors_.begin(), factors_.end(), [&](const Factor& g) { return g.poly == f.poly; });
    const std::uint32_t have = it == factors_.end() ? 0 : it->mult;
    if (f.mult > have) num_ *= f.poly.pow(f.mult - have);
  }
  factors_ = target;
}

std::optional<MPoly> RatFunc::as_polynomial() const {
  if (factors_.empty()) return num_;
  return std::nullopt;
}

std::optional<CycScalar> RatFunc::constant_value() const {
  if (!factors_.empty()) return std::nullopt;
  return num_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    const auto common = lcm(factors_, rhs.factors_);
    RatFunc other = rhs;
    raise_to(common);
    other.raise_to(common);
    num_ += other.num_;
  }
  cancel();
  rebuild_den();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = RatFunc(nvars());
  // Cancel each side's numerator against the other's factors before
  // multiplying out; the numerators are already reduced against their own.
  RatFunc a = *this;
  RatFunc b = rhs;
  std::vector<Factor> merged;
  auto cross = [](MPoly& num, std::vector<Factor>& factors) {
    for (auto& f : factors)
      while (f.mult > 0 && f.poly.total_degree() <= num.total_degree()) {
        auto q = exact_divide(num, f.poly);
        if (!q) break;
        num = std::move(*q);
        --f.mult;
      }
  };
  cross(a.num_, b.factors_);
  cross(b.num_, a.factors_);
  merged = a.factors_;
  for (const auto& f : b.factors_) {
    if (f.mult == 0) continue;
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Factor& g) { return g.poly == f.poly; });
    if (it == merged.end())
      merged.push_back(f);
    else
      it->mult += f.mult;
  }
  std::erase_if(merged, [](const Factor& f) { return f.mult == 0; });
  num_ = a.num_ * b.num_;
  factors_ = std::move(merged);
  rebuild_den();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) { return *this *= rhs.inverse(); }

RatFunc& RatFunc::operator*=(const CycScalar& c) {
  num_ *= c;
  if (num_.is_zero()) {
    factors_.clear();
    rebuild_den();
  }
  return *this;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  const auto common = RatFunc::lcm(a.factors_, b.factors_);
  RatFunc x = a;
  RatFunc y = b;
  x.raise_to(common);
  y.raise_to(common);
  return x.num_ == y.num_;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  RatFunc out = *this;
  const auto e = static_cast<std::uint32_t>(exponent);
  out.num_ = num_.pow(e);
  for (auto& f : out.factors_) f.mult *= e;
  std::erase_if(out.factors_, [](const Factor& f) { return f.mult == 0; });
  out.rebuild_den();
  return out;
}

std::string RatFunc::to_string(const VarNamer& names) const {
  if (factors_.empty()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

RatFunc substitute(const RatFunc& f, std::span<const MPoly> images) {
  MPoly den = substitute(f.den(), images);
  if (den.is_zero()) throw DivisionByZero("denominator vanishes under substitution");
  return RatFunc(substitute(f.num(), images), std::move(den));
}

}  // namespace radix
