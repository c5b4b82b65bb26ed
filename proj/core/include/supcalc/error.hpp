#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace supcalc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::set<std::string> expected,
              std::string found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::set<std::string> expected_;
  std::string found_;
};

/// A pair of weights (p, q) that does not sum to the semiring unit.
class WeightError : public Error {
 public:
  using Error::Error;
};

/// A literal the chosen semiring cannot represent (e.g. 1/2 over booleans).
class ScalarDomainError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

enum class TypeErrorKind { UnboundVariable, LinearViolation, TypeMismatch, WeightError };

const char* to_string(TypeErrorKind kind);

class TypeError : public Error {
 public:
  TypeError(TypeErrorKind kind, const std::string& message)
      : Error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}
  TypeErrorKind kind() const { return kind_; }

 private:
  TypeErrorKind kind_;
};

/// normalize() reached a sup-elimination redex; use distribution() instead.
class SupBranchEncountered : public Error {
 public:
  using Error::Error;
};

class ReductionBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class EmptyDistribution : public Error {
 public:
  using Error::Error;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

class NotInV : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace supcalc
