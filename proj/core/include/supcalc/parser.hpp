#pragma once

#include "supcalc/context.hpp"
#include "supcalc/proposition.hpp"
#include "supcalc/semiring.hpp"
#include "supcalc/term.hpp"

#include <optional>
#include <string_view>

namespace supcalc {

/// Parses a proof-term. Scalar literals are injected into `s`; a literal the
/// semiring cannot hold raises ScalarDomainError, malformed text SyntaxError,
/// and sup_elim weights not summing to 1 WeightError.
Term parse_term(std::string_view text, const Semiring& s = default_semiring());

/// `-o` binds loosest and associates to the right; then `(+)`, then `&` and
/// `(o)`, then `(*)`. The binary operators other than `-o` associate left.
Proposition parse_proposition(std::string_view text);

/// `x:A, y:B`; the empty string is the empty context.
Context parse_context(std::string_view text);

/// Contents of a `.lsup` file: one term, `--` comment lines, and an optional
/// `-- ctx: x:A, ...` header.
struct Source {
  Term term;
  Context context;
  /// From a `-- type:` header; binder types are inferred against it.
  std::optional<Proposition> type;
};

Source parse_source(std::string_view text, const Semiring& s = default_semiring());

}  // namespace supcalc
