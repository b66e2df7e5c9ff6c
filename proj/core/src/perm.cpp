#include "radix/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "radix/error.hpp"

namespace radix {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw DomainError("images do not form a permutation");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::cycle(std::size_t n, std::initializer_list<std::uint32_t> points) {
  return cycle(n, std::vector<std::uint32_t>(points));
}

Perm Perm::cycle(std::size_t n, const std::vector<std::uint32_t>& points) {
  Perm p = identity(n);
  std::vector<bool> used(n, false);
  for (auto v : points) {
    if (v == 0 || v > n) throw DomainError("cycle point " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (used[v - 1]) throw DomainError("repeated point " + std::to_string(v) + " in cycle");
    used[v - 1] = true;
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    p.images_[points[i] - 1] = points[(i + 1) % points.size()] - 1;
  return p;
}

Perm Perm::transposition(std::size_t n, std::uint32_t i, std::uint32_t j) { return cycle(n, {i, j}); }

Perm Perm::parse(std::string_view text, std::size_t n) {
  Perm result = identity(n);
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) { throw ParseError(1, pos + 1, msg); };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::uint32_t> points;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point or ')'");
      std::uint64_t v = 0;
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (v > n) {
          pos = start;
          fail("point outside 1.." + std::to_string(n));
        }
        ++pos;
      }
      if (v == 0) {
        pos = start;
        fail("points are numbered from 1");
      }
      for (auto p : points)
        if (p == v) {
          pos = start;
          fail("repeated point " + std::to_string(v));
        }
      points.push_back(static_cast<std::uint32_t>(v));
    }
    if (points.size() > 1) result = compose(result, cycle(n, points));
    skip_ws();
  }
  return result;
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Parity Perm::parity() const {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inversions;
  return inversions % 2 == 0 ? Parity::Even : Parity::Odd;
}

Perm Perm::inverse() const {
  Perm out = identity(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = i;
  return out;
}

Perm Perm::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Perm result = identity(images_.size());
  Perm base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = compose(result, base);
    exponent >>= 1;
    if (exponent) base = compose(base, base);
  }
  return result;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << "(";
    for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
      if (j != i) os << " ";
      os << j + 1;
      seen[j] = true;
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw Mismatch("permutation degrees differ: " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
  std::vector<std::uint32_t> images(a.degree());
  for (std::uint32_t i = 0; i < images.size(); ++i) images[i] = a(b(i));
  return Perm(std::move(images));
}

}  // namespace radix
