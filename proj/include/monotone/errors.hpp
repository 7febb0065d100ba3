#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monotone {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexOutsideWindow : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A desk-scale resource guard was exceeded (maps to CLI exit code 3).
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NoUnit : public Error {
 public:
  using Error::Error;
};

class UnsupportedMultiplicity : public Error {
 public:
  using Error::Error;
};

class RankOutOfScale : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic left the 64-bit range. Never an input error.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

/// The rewriter ran out of fuel; signals a termination bug, not bad input.
class RewriteBudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace monotone
