#pragma once

#include "supcalc/matmodel.hpp"
#include "supcalc/rewrite.hpp"
#include "supcalc/typing.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace supcalc::cli {

using Json = nlohmann::ordered_json;

Json derivation_json(const Derivation& d);
/// Array of {weight, term}, scalars as strings.
Json distribution_json(const Distribution& d);
/// {rows, cols, entries}, entries row-major as strings.
Json matrix_json(const model::Mat& m);

/// A JSON array of arrays of scalars (strings or numbers). Throws Error.
model::Mat parse_matrix_literal(const std::string& text, const Semiring& s);
/// A JSON array of scalars, or the same list in parentheses: `(5,6)`.
/// Throws Error.
std::vector<Scalar> parse_vector_literal(const std::string& text, const Semiring& s);

}  // namespace supcalc::cli
