#include "supcalc/scalar.hpp"

#include "supcalc/error.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace supcalc {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

[[noreturn]] void mixed_carriers() {
  throw std::logic_error("scalar arithmetic across different semiring carriers");
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw Error("malformed scalar literal '" + text + "'");
    cpp_int d{std::string(den)};
    if (d == 0) throw Error("zero denominator in scalar literal '" + text + "'");
    value = Rational(cpp_int{std::string(num)}, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) throw Error("malformed scalar literal '" + text + "'");
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(cpp_int{std::string(whole)} * scale + cpp_int{std::string(frac)}, scale);
  } else {
    if (!all_digits(s)) throw Error("malformed scalar literal '" + text + "'");
    value = Rational(cpp_int{std::string(s)});
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return v.is_zero();
        } else if constexpr (std::is_same_v<T, bool>) {
          return !v;
        } else {
          return std::abs(v) <= kFloatTolerance;
        }
      },
      value_);
}

bool Scalar::is_one() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return v == 1;
        } else if constexpr (std::is_same_v<T, bool>) {
          return v;
        } else {
          return std::abs(v - 1.0) <= kFloatTolerance;
        }
      },
      value_);
}

std::string Scalar::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return format_rational(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "1" : "0";
        } else {
          char buf[64];
          auto res = std::to_chars(buf, buf + sizeof buf, v);
          std::string out(buf, res.ptr);
          // Keep the text inside the literal grammar (no exponent form).
          if (out.find('e') != std::string::npos || out.find("inf") != std::string::npos ||
              out.find("nan") != std::string::npos) {
            res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
            out.assign(buf, res.ptr);
          }
          return out;
        }
      },
      value_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) mixed_carriers();
  switch (a.value_.index()) {
    case 0: return Scalar(Rational(std::get<Rational>(a.value_) + std::get<Rational>(b.value_)));
    case 1: return Scalar(std::get<bool>(a.value_) || std::get<bool>(b.value_));
    default: return Scalar(std::get<double>(a.value_) + std::get<double>(b.value_));
  }
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) mixed_carriers();
  switch (a.value_.index()) {
    case 0: return Scalar(Rational(std::get<Rational>(a.value_) * std::get<Rational>(b.value_)));
    case 1: return Scalar(std::get<bool>(a.value_) && std::get<bool>(b.value_));
    default: return Scalar(std::get<double>(a.value_) * std::get<double>(b.value_));
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  switch (a.value_.index()) {
    case 0: return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
    case 1: return std::get<bool>(a.value_) == std::get<bool>(b.value_);
    default:
      return std::abs(std::get<double>(a.value_) - std::get<double>(b.value_)) <=
             Scalar::kFloatTolerance;
  }
}

}  // namespace supcalc
