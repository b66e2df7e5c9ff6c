#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace radix {

enum class Parity { Even, Odd };

// Permutation of {1..n}. Images are stored 0-based; every constructor taking
// points from users (cycles, transpositions, parse) is 1-based.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::size_t n);
  // A single cycle (c1 c2 ... cm) on {1..n}.
  static Perm cycle(std::size_t n, std::initializer_list<std::uint32_t> points);
  static Perm cycle(std::size_t n, const std::vector<std::uint32_t>& points);
  static Perm transposition(std::size_t n, std::uint32_t i, std::uint32_t j);
  // Cycle notation, e.g. "(1 2 3)(4 5)"; "()" or "" is the identity.
  // Throws ParseError on malformed text or points outside {1..n}.
  static Perm parse(std::string_view text, std::size_t n);

  std::size_t degree() const noexcept { return images_.size(); }
  // 0-based image.
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  bool is_identity() const;
  Parity parity() const;
  bool is_even() const { return parity() == Parity::Even; }
  Perm inverse() const;
  Perm pow(long exponent) const;
  std::size_t order() const;

  // Disjoint cycles, fixed points omitted; identity prints as "()".
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

// (a b)(i) = a(b(i)). Throws Mismatch on degree mismatch.
Perm compose(const Perm& a, const Perm& b);
inline Perm operator*(const Perm& a, const Perm& b) { return compose(a, b); }

}  // namespace radix
