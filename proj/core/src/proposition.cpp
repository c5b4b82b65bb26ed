#include "supcalc/proposition.hpp"

#include <optional>
#include <stdexcept>

namespace supcalc {

struct Proposition::Node {
  PropKind kind;
  std::optional<Proposition> left;
  std::optional<Proposition> right;
};

Proposition Proposition::one() {
  static const auto n = std::make_shared<const Node>(Node{PropKind::One, std::nullopt, std::nullopt});
  return Proposition(n);
}

Proposition Proposition::top() {
  static const auto n = std::make_shared<const Node>(Node{PropKind::Top, std::nullopt, std::nullopt});
  return Proposition(n);
}

Proposition Proposition::zero() {
  static const auto n = std::make_shared<const Node>(Node{PropKind::Zero, std::nullopt, std::nullopt});
  return Proposition(n);
}

Proposition Proposition::binary(PropKind kind, Proposition a, Proposition b) {
  switch (kind) {
    case PropKind::One:
    case PropKind::Top:
    case PropKind::Zero: throw std::invalid_argument("Proposition::binary on a nullary connective");
    default: break;
  }
  return Proposition(std::make_shared<const Node>(Node{kind, std::move(a), std::move(b)}));
}

Proposition Proposition::tensor(Proposition a, Proposition b) {
  return binary(PropKind::Tensor, std::move(a), std::move(b));
}
Proposition Proposition::lollipop(Proposition a, Proposition b) {
  return binary(PropKind::Lollipop, std::move(a), std::move(b));
}
Proposition Proposition::with(Proposition a, Proposition b) {
  return binary(PropKind::With, std::move(a), std::move(b));
}
Proposition Proposition::plus(Proposition a, Proposition b) {
  return binary(PropKind::Plus, std::move(a), std::move(b));
}
Proposition Proposition::sup(Proposition a, Proposition b) {
  return binary(PropKind::Sup, std::move(a), std::move(b));
}

PropKind Proposition::kind() const { return node_->kind; }

bool Proposition::is_binary() const { return node_->left.has_value(); }

const Proposition& Proposition::left() const {
  if (!is_binary()) throw std::logic_error("left() of a nullary proposition");
  return *node_->left;
}

const Proposition& Proposition::right() const {
  if (!is_binary()) throw std::logic_error("right() of a nullary proposition");
  return *node_->right;
}

bool Proposition::is_semimodule() const {
  switch (kind()) {
    case PropKind::One: return true;
    case PropKind::With: return left().is_semimodule() && right().is_semimodule();
    default: return false;
  }
}

std::size_t Proposition::size() const {
  return is_binary() ? 1 + left().size() + right().size() : 1;
}

const char* connective_symbol(PropKind kind) {
  switch (kind) {
    case PropKind::One: return "one";
    case PropKind::Top: return "top";
    case PropKind::Zero: return "zero";
    case PropKind::Tensor: return "(*)";
    case PropKind::Lollipop: return "-o";
    case PropKind::With: return "&";
    case PropKind::Plus: return "(+)";
    case PropKind::Sup: return "(o)";
  }
  return "?";
}

std::string Proposition::to_string() const {
  if (!is_binary()) return connective_symbol(kind());
  auto operand = [](const Proposition& p) {
    return p.is_binary() ? "(" + p.to_string() + ")" : p.to_string();
  };
  return operand(left()) + " " + connective_symbol(kind()) + " " + operand(right());
}

bool operator==(const Proposition& a, const Proposition& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (!a.is_binary()) return true;
  return a.left() == b.left() && a.right() == b.right();
}

bool operator<(const Proposition& a, const Proposition& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (!a.is_binary()) return false;
  if (a.left() != b.left()) return a.left() < b.left();
  return a.right() < b.right();
}

}  // namespace supcalc
