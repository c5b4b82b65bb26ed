#include "supcalc/context.hpp"

#include "supcalc/error.hpp"

#include <set>

namespace supcalc {

Context::Context(std::vector<Binding> bindings) : bindings_(std::move(bindings)) {
  std::set<std::string> seen;
  for (const auto& [name, type] : bindings_) {
    if (!seen.insert(name).second) throw Error("variable '" + name + "' bound twice in context");
  }
}

std::optional<std::size_t> Context::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < bindings_.size(); ++i) {
    if (bindings_[i].first == name) return i;
  }
  return std::nullopt;
}

std::vector<std::string> Context::names() const {
  std::vector<std::string> out;
  out.reserve(bindings_.size());
  for (const auto& b : bindings_) out.push_back(b.first);
  return out;
}

Context Context::select(const std::vector<std::size_t>& indices) const {
  std::vector<Binding> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(bindings_.at(i));
  return Context(std::move(out));
}

Context Context::extended(std::string name, Proposition type) const {
  auto out = bindings_;
  out.emplace_back(std::move(name), std::move(type));
  return Context(std::move(out));
}

Context Context::prepended(std::string name, Proposition type) const {
  std::vector<Binding> out;
  out.reserve(bindings_.size() + 1);
  out.emplace_back(std::move(name), std::move(type));
  out.insert(out.end(), bindings_.begin(), bindings_.end());
  return Context(std::move(out));
}

Context Context::concat(const Context& other) const {
  auto out = bindings_;
  out.insert(out.end(), other.bindings_.begin(), other.bindings_.end());
  return Context(std::move(out));
}

std::string Context::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < bindings_.size(); ++i) {
    if (i) out += ", ";
    out += bindings_[i].first + ":" + bindings_[i].second.to_string();
  }
  return out;
}

}  // namespace supcalc
