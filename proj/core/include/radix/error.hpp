#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radix {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Operands live in incompatible contexts (variable counts, permutation
// degrees, cyclotomic orders that do not divide).
class Mismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

// A tower inverse met a nonunit gcd: the level's nonpower attestation was wrong.
class AttestationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace radix
