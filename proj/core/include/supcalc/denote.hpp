#pragma once

#include "supcalc/context.hpp"
#include "supcalc/matmodel.hpp"
#include "supcalc/rewrite.hpp"
#include "supcalc/typing.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace supcalc {

/// The matrix of a derivation: a map from the context object to the type object.
struct Interp {
  Derivation derivation;
  model::Obj object_in;
  model::Obj object_out;
  model::Mat matrix;
};

/// one -> 1; top, zero -> 0; (*), -o -> product; &, (+), (o) -> sum.
model::Obj denote_prop(const Proposition& a);
/// Left-associated tensor of the bindings; 1 when empty.
model::Obj denote_ctx(const Context& g);

/// The iso from the context object to the tensor of the bindings taken in
/// `order`, built from adjacent symmetries.
model::Mat context_permutation(const Context& g, const std::vector<std::size_t>& order,
                               const Semiring& s = default_semiring());

/// Interprets every rule bottom-up. Throws ShapeMismatch only on an invalid
/// derivation.
Interp denote(const Derivation& d, const Semiring& s = default_semiring());

/// typecheck then denote.
model::Mat denote_term(const Term& t, const Context& ctx = Context(),
                       const std::optional<Proposition>& expected = std::nullopt,
                       const Semiring& s = default_semiring());

/// Substituting the conclusion of vD for x in tD commutes with composing
/// their matrices: [[(v/x)t]] = [[t]] . (Id (*) [[v]] (*) Id), with the context
/// of vD taking the place of x. Throws TypeError if the substituted term does
/// not type in that context.
bool check_substitution(const Derivation& td, const std::string& x, const Derivation& vd,
                        const Semiring& s = default_semiring());

struct StepSoundnessReport {
  std::size_t redexes_checked = 0;
  /// Rules of the redexes checked, one entry per redex (a sup-elimination
  /// redex contributes both branch rules).
  std::vector<RewriteRule> rules;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// For every redex of t: a deterministic step preserves the matrix; a
/// sup-elimination step with branches r1, r2 gives p.[[r1]] + q.[[r2]], written
/// as the weighted codiagonal after [[r1]] (+) [[r2]] after the diagonal.
StepSoundnessReport check_step_soundness(const Term& t, const Context& ctx = Context(),
                                         const Semiring& s = default_semiring());

/// [[t]] equals the matrix of the weighted sum of its distribution.
bool check_global_soundness(const Term& t, const Context& ctx = Context(), const Semiring& s = default_semiring());

enum class Verdict {
  /// Equal matrices and the terms are observationally equivalent.
  Consistent,
  /// Equal matrices; no observation procedure exists at this type.
  Undecided,
  DistinctDenotations,
  /// Equal matrices but observably different: a counterexample.
  Inconsistent,
};
const char* to_string(Verdict v);

struct AdequacyResult {
  Verdict verdict;
  Proposition type;
  model::Mat left;
  model::Mat right;
};

/// Compares closed t and u of the same type. Observations are decided on
/// propositions built from `one` and `&`, on `top`, and on maps between two
/// propositions built from `one` and `&` (through their matrices of
/// applications to basis vectors). Throws TypeError when the types differ.
AdequacyResult adequacy_compare(const Term& t, const Term& u, const Semiring& s = default_semiring());

}  // namespace supcalc
