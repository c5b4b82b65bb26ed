#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <variant>

namespace supcalc {

using Rational = boost::multiprecision::cpp_rational;

/// Parses `int`, `int/int` or a decimal `int.digits` into an exact rational.
/// Throws Error on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

/// A value of one of the shipped semiring carriers.
///
/// The carrier is fixed by the alternative held; arithmetic between scalars of
/// different carriers is a logic error. Equality on the float carrier is
/// tolerance based (|a - b| <= 1e-9), exact on the others.
class Scalar {
 public:
  using Value = std::variant<Rational, bool, double>;

  static constexpr double kFloatTolerance = 1e-9;

  Scalar() : value_(Rational(0)) {}
  explicit Scalar(Rational r) : value_(std::move(r)) {}
  explicit Scalar(bool b) : value_(b) {}
  explicit Scalar(double d) : value_(d) {}

  const Value& value() const { return value_; }
  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  bool is_boolean() const { return std::holds_alternative<bool>(value_); }
  bool is_float() const { return std::holds_alternative<double>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }

  bool is_zero() const;
  bool is_one() const;

  /// Round-trippable text: `3`, `-1/2`, `1`/`0` for booleans, shortest decimal
  /// for floats.
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Value value_;
};

}  // namespace supcalc
