#pragma once

#include <memory>
#include <string>

namespace supcalc {

enum class PropKind { One, Top, Zero, Tensor, Lollipop, With, Plus, Sup };

/// A formula of IMALL extended with the sup connective (A (o) B).
///
/// Immutable and cheap to copy; children are shared.
class Proposition {
 public:
  static Proposition one();
  static Proposition top();
  static Proposition zero();
  static Proposition tensor(Proposition a, Proposition b);
  static Proposition lollipop(Proposition a, Proposition b);
  static Proposition with(Proposition a, Proposition b);
  static Proposition plus(Proposition a, Proposition b);
  static Proposition sup(Proposition a, Proposition b);
  static Proposition binary(PropKind kind, Proposition a, Proposition b);

  PropKind kind() const;
  bool is_binary() const;
  const Proposition& left() const;
  const Proposition& right() const;

  /// One of `one`/`top`; the observable result types of elimination contexts.
  bool is_basic() const { return kind() == PropKind::One || kind() == PropKind::Top; }
  /// Built only from `one` and `&`.
  bool is_semimodule() const;
  std::size_t size() const;

  std::string to_string() const;

  friend bool operator==(const Proposition& a, const Proposition& b);
  friend bool operator!=(const Proposition& a, const Proposition& b) { return !(a == b); }
  friend bool operator<(const Proposition& a, const Proposition& b);

 private:
  struct Node;
  explicit Proposition(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

const char* connective_symbol(PropKind kind);

}  // namespace supcalc
