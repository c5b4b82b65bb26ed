#include "supcalc/semiring.hpp"

#include "supcalc/error.hpp"

namespace supcalc {

std::string_view Semiring::name() const {
  switch (kind_) {
    case SemiringKind::NonNegRational: return "qnn";
    case SemiringKind::Rational: return "q";
    case SemiringKind::Boolean: return "bool";
    case SemiringKind::Float: return "f64";
  }
  return "?";
}

Scalar Semiring::zero() const {
  switch (kind_) {
    case SemiringKind::Boolean: return Scalar(false);
    case SemiringKind::Float: return Scalar(0.0);
    default: return Scalar(Rational(0));
  }
}

Scalar Semiring::one() const {
  switch (kind_) {
    case SemiringKind::Boolean: return Scalar(true);
    case SemiringKind::Float: return Scalar(1.0);
    default: return Scalar(Rational(1));
  }
}

Scalar Semiring::from_rational(const Rational& r) const {
  switch (kind_) {
    case SemiringKind::NonNegRational:
      if (r < 0) {
        throw ScalarDomainError("scalar " + format_rational(r) +
                                " is negative; not in the non-negative rationals (use --semiring q)");
      }
      return Scalar(r);
    case SemiringKind::Rational: return Scalar(r);
    case SemiringKind::Boolean:
      if (r == 0) return Scalar(false);
      if (r == 1) return Scalar(true);
      throw ScalarDomainError("scalar " + format_rational(r) + " has no image in the boolean semiring");
    case SemiringKind::Float: return Scalar(static_cast<double>(r));
  }
  throw ScalarDomainError("unknown semiring");
}

bool Semiring::contains(const Scalar& s) const {
  switch (kind_) {
    case SemiringKind::NonNegRational: return s.is_rational() && s.rational() >= 0;
    case SemiringKind::Rational: return s.is_rational();
    case SemiringKind::Boolean: return s.is_boolean();
    case SemiringKind::Float: return s.is_float();
  }
  return false;
}

const Semiring& semiring(SemiringKind kind) {
  static const Semiring qnn(SemiringKind::NonNegRational);
  static const Semiring q(SemiringKind::Rational);
  static const Semiring b(SemiringKind::Boolean);
  static const Semiring f(SemiringKind::Float);
  switch (kind) {
    case SemiringKind::NonNegRational: return qnn;
    case SemiringKind::Rational: return q;
    case SemiringKind::Boolean: return b;
    case SemiringKind::Float: return f;
  }
  return qnn;
}

std::optional<SemiringKind> parse_semiring_kind(std::string_view name) {
  if (name == "qnn") return SemiringKind::NonNegRational;
  if (name == "q") return SemiringKind::Rational;
  if (name == "bool") return SemiringKind::Boolean;
  if (name == "f64") return SemiringKind::Float;
  return std::nullopt;
}

WeightPair make_weight_pair(const Semiring& s, Scalar p, Scalar q) {
  if (!s.contains(p) || !s.contains(q)) {
    throw WeightError("weights " + p.to_string() + ", " + q.to_string() + " are not in semiring " +
                      std::string(s.name()));
  }
  if (!s.equal(p + q, s.one())) {
    throw WeightError("weights " + p.to_string() + " and " + q.to_string() + " sum to " +
                      (p + q).to_string() + ", not 1");
  }
  return WeightPair(std::move(p), std::move(q));
}

}  // namespace supcalc
