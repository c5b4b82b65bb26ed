#pragma once

#include "supcalc/scalar.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace supcalc {

enum class SemiringKind {
  NonNegRational,  // qnn, the default
  Rational,        // q
  Boolean,         // bool, or/and
  Float,           // f64, tolerance equality
};

/// The scalar algebra S a calculus instance is parameterised by.
///
/// Instances are process-wide singletons obtained from semiring(kind); they are
/// immutable and may be shared freely across threads.
class Semiring {
 public:
  SemiringKind kind() const { return kind_; }
  std::string_view name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  bool equal(const Scalar& a, const Scalar& b) const { return a == b; }

  /// Canonical map from source-text rationals into the carrier.
  /// Throws ScalarDomainError when the literal has no image (1/2 over bool,
  /// negatives over qnn).
  Scalar from_rational(const Rational& r) const;
  Scalar from_literal(const std::string& text) const { return from_rational(parse_rational(text)); }

  /// True when s is a value of this carrier (right alternative, in range).
  bool contains(const Scalar& s) const;

  friend bool operator==(const Semiring& a, const Semiring& b) { return a.kind_ == b.kind_; }

 private:
  friend const Semiring& semiring(SemiringKind kind);
  explicit Semiring(SemiringKind kind) : kind_(kind) {}
  SemiringKind kind_;
};

const Semiring& semiring(SemiringKind kind);
inline const Semiring& default_semiring() { return semiring(SemiringKind::NonNegRational); }

/// Accepts `qnn`, `q`, `bool`, `f64`.
std::optional<SemiringKind> parse_semiring_kind(std::string_view name);

/// A validated pair (p, q) with p + q = 1: the legal annotations of
/// sup-elimination.
class WeightPair {
 public:
  const Scalar& p() const { return p_; }
  const Scalar& q() const { return q_; }

 private:
  friend WeightPair make_weight_pair(const Semiring& s, Scalar p, Scalar q);
  WeightPair(Scalar p, Scalar q) : p_(std::move(p)), q_(std::move(q)) {}
  Scalar p_;
  Scalar q_;
};

/// Throws WeightError unless p + q equals the unit of s.
WeightPair make_weight_pair(const Semiring& s, Scalar p, Scalar q);

}  // namespace supcalc
