#pragma once

#include <stdexcept>
#include <string>

namespace constalg {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings with different numbers of variables.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An instance with a zero or constant f_i.
class DegenerateInstance : public Error {
 public:
  using Error::Error;
};

class NotConstant : public Error {
 public:
  NotConstant() : Error("not a constant") {}
};

/// A monomial that cannot be the leading monomial of the image of a normal word.
class PeelingFailure : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& what) : Error(what + ": zero polynomial") {}
};

}  // namespace constalg
