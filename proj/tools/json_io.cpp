#include "json_io.hpp"

#include "supcalc/error.hpp"

namespace supcalc::cli {

namespace {

Scalar scalar_of(const Json& j, const Semiring& s) {
  if (j.is_string()) return s.from_literal(j.get<std::string>());
  if (j.is_number_integer()) return s.from_literal(std::to_string(j.get<long long>()));
  if (j.is_number()) return s.from_literal(j.dump());
  throw Error("expected a scalar, got " + j.dump());
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error("malformed literal '" + text + "': " + e.what());
  }
}

}  // namespace

Json derivation_json(const Derivation& d) {
  Json premises = Json::array();
  for (const auto& p : d.premises) premises.push_back(derivation_json(p));
  return Json{{"rule", to_string(d.rule)},
              {"context", d.context.to_string()},
              {"term", d.term.to_string()},
              {"type", d.type.to_string()},
              {"premises", std::move(premises)}};
}

Json distribution_json(const Distribution& d) {
  Json out = Json::array();
  for (const auto& o : d) out.push_back(Json{{"weight", o.weight.to_string()}, {"term", o.value.to_string()}});
  return out;
}

Json matrix_json(const model::Mat& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries()) entries.push_back(e.to_string());
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

model::Mat parse_matrix_literal(const std::string& text, const Semiring& s) {
  Json j = parse_json(text);
  if (!j.is_array() || j.empty()) throw Error("a matrix literal is a non-empty array of rows");
  std::size_t cols = 0;
  std::vector<Scalar> entries;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error("a matrix literal is an array of rows");
    if (entries.empty() && cols == 0) cols = row.size();
    if (row.size() != cols) throw Error("matrix rows have different lengths");
    for (const auto& e : row) entries.push_back(scalar_of(e, s));
  }
  return model::Mat(j.size(), cols, std::move(entries), s);
}

std::vector<Scalar> parse_vector_literal(const std::string& text, const Semiring& s) {
  std::string t = text;
  auto first = t.find_first_not_of(" \t");
  auto last = t.find_last_not_of(" \t");
  if (first != std::string::npos && t[first] == '(' && t[last] == ')') {
    // Parenthesised lists hold bare scalars such as 1/2; quote each one.
    std::string inner = t.substr(first + 1, last - first - 1);
    std::string quoted = "[";
    std::size_t start = 0;
    while (start <= inner.size()) {
      auto comma = inner.find(',', start);
      if (comma == std::string::npos) comma = inner.size();
      std::string item = inner.substr(start, comma - start);
      auto a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
      if (a == std::string::npos) throw Error("empty entry in vector literal '" + text + "'");
      if (quoted.size() > 1) quoted += ",";
      quoted += "\"" + item.substr(a, b - a + 1) + "\"";
      start = comma + 1;
    }
    t = quoted + "]";
  }
  Json j = parse_json(t);
  if (!j.is_array()) throw Error("a vector literal is an array of scalars");
  std::vector<Scalar> out;
  for (const auto& e : j) out.push_back(scalar_of(e, s));
  return out;
}

}  // namespace supcalc::cli
