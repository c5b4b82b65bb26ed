#pragma once

#include "supcalc/context.hpp"
#include "supcalc/proposition.hpp"
#include "supcalc/term.hpp"

#include <optional>
#include <string>
#include <vector>

namespace supcalc {

enum class Rule {
  Ax,
  Sum,
  Scal,
  OneI,
  OneE,
  TensorI,
  TensorE,
  LollipopI,
  LollipopE,
  TopI,
  ZeroE,
  WithI,
  WithE1,
  WithE2,
  PlusI1,
  PlusI2,
  PlusE,
  SupI,
  SupE1,
  SupE2,
  SupE,
};

inline constexpr std::size_t kRuleCount = 21;
const char* to_string(Rule rule);
std::vector<Rule> all_rules();

/// How a multiplicative rule divides its context.
///
/// `order` lists ambient context indices: the first `first_size` form the first
/// part, the rest the second; within each part the ambient order is kept. Which
/// premise owns which part:
///   OneE, TensorI, LollipopE   first -> child 0, second -> child 1
///   TensorE                    first -> the continuation (before x, y), second -> child 0
///   PlusE, SupE                first -> child 0, second -> both branches (after x / y)
///   ZeroE                      first -> child 0, second -> absorbed
struct SplitPlan {
  std::vector<std::size_t> order;
  std::size_t first_size = 0;

  std::vector<std::size_t> first() const;
  std::vector<std::size_t> second() const;
};

struct Derivation {
  Rule rule;
  Context context;
  Term term;
  Proposition type;
  std::vector<Derivation> premises;
  std::optional<SplitPlan> split;

  std::size_t size() const;
};

/// Infers the type of t in ctx and builds its derivation.
///
/// Binder types are not written in terms; they are solved by unification.
/// A binder whose type nothing constrains gets `one`, so `lam(x, x)` is
/// typed `one -o one` unless `expected` says otherwise. Binders that clash
/// with a context name or an enclosing binder are renamed first, so the
/// derivation's term may differ from t up to alpha-equivalence.
///
/// Throws TypeError.
Derivation typecheck(const Context& ctx, const Term& t,
                     const std::optional<Proposition>& expected = std::nullopt);

inline Derivation typecheck(const Term& t) { return typecheck(Context(), t); }

struct Diagnosis {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Checks that every node instantiates its rule schema and every split is a
/// partition of its context.
Diagnosis validate(const Derivation& d);

/// Multiset of rules used in d (one entry per node).
std::vector<Rule> rules_used(const Derivation& d);

struct SubjectReductionReport {
  Proposition type = Proposition::one();
  std::size_t reducts_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Re-typechecks every one-step reduct of t (both sup branches) against the
/// type of t. Typing failures of reducts are findings, not exceptions.
SubjectReductionReport check_subject_reduction(const Term& t, const Context& ctx = Context());

/// Whether t can take extra, unused context variables (through a `unit` or
/// the absorbed part of a `zero_elim`).
bool absorbs(const Term& t);

}  // namespace supcalc
