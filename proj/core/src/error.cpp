#include "supcalc/error.hpp"

namespace supcalc {

const char* to_string(TypeErrorKind kind) {
  switch (kind) {
    case TypeErrorKind::UnboundVariable: return "UnboundVariable";
    case TypeErrorKind::LinearViolation: return "LinearViolation";
    case TypeErrorKind::TypeMismatch: return "TypeMismatch";
    case TypeErrorKind::WeightError: return "WeightError";
  }
  return "TypeError";
}

namespace {

std::string describe_expected(const std::set<std::string>& expected) {
  std::string out;
  for (const auto& e : expected) {
    if (!out.empty()) out += ", ";
    out += e;
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column, std::set<std::string> expected,
                         std::string found)
    : Error("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
            ": expected one of {" + describe_expected(expected) + "}, found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

}  // namespace supcalc
