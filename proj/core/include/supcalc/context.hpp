#pragma once

#include "supcalc/proposition.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace supcalc {

/// An ordered typing context x1:A1, ..., xn:An with pairwise distinct names.
class Context {
 public:
  using Binding = std::pair<std::string, Proposition>;

  Context() = default;
  /// Throws Error on a repeated name.
  explicit Context(std::vector<Binding> bindings);

  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }
  const Binding& operator[](std::size_t i) const { return bindings_.at(i); }
  const std::vector<Binding>& bindings() const { return bindings_; }
  auto begin() const { return bindings_.begin(); }
  auto end() const { return bindings_.end(); }

  std::optional<std::size_t> index_of(const std::string& name) const;
  bool contains(const std::string& name) const { return index_of(name).has_value(); }
  std::vector<std::string> names() const;

  /// Entries at the given indices, in that order.
  Context select(const std::vector<std::size_t>& indices) const;
  Context extended(std::string name, Proposition type) const;
  Context concat(const Context& other) const;
  /// x:A prepended.
  Context prepended(std::string name, Proposition type) const;

  /// `x:A, y:B`; empty string for the empty context.
  std::string to_string() const;

  friend bool operator==(const Context& a, const Context& b) { return a.bindings_ == b.bindings_; }
  friend bool operator!=(const Context& a, const Context& b) { return !(a == b); }

 private:
  std::vector<Binding> bindings_;
};

}  // namespace supcalc
