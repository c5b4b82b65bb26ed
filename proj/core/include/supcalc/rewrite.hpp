#pragma once

#include "supcalc/proposition.hpp"
#include "supcalc/semiring.hpp"
#include "supcalc/term.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace supcalc {

enum class RewriteRule {
  // beta group
  UnitElim,
  TensElim,
  Beta,
  Proj1,
  Proj2,
  CaseInl,
  CaseInr,
  SupProj1,
  SupProj2,
  SupElimLeft,
  SupElimRight,
  // commutation group: sums
  SumOne,
  SumTens,
  SumLam,
  SumTop,
  SumWith,
  SumPlus,
  SumSup,
  // commutation group: scalar products
  ScalOne,
  ScalTens,
  ScalLam,
  ScalTop,
  ScalWith,
  ScalPlus,
  ScalSup,
};

inline constexpr std::size_t kRewriteRuleCount = 25;
const char* to_string(RewriteRule rule);
std::vector<RewriteRule> all_rewrite_rules();
inline bool is_sup_branch(RewriteRule r) {
  return r == RewriteRule::SupElimLeft || r == RewriteRule::SupElimRight;
}

struct Step {
  Position position;
  RewriteRule rule;
  /// 1 except for the two sup-elimination branches (p and q).
  Scalar weight;
};

/// Redexes at the root of t with their contracta. A sup-elimination redex
/// yields two entries.
std::vector<std::pair<Step, Term>> contract_root(const Term& t, const Semiring& s = default_semiring());

/// Every redex at every position, in pre-order (outer before inner, left
/// before right), each paired with the whole reduct.
std::vector<std::pair<Step, Term>> step_all(const Term& t, const Semiring& s = default_semiring());

bool is_normal(const Term& t);

enum class Strategy {
  LeftmostOutermost,
  RightmostOutermost,
  LeftmostInnermost,
  RightmostInnermost,
  Random,  // uniform over all redexes, seeded
};

struct ReduceOptions {
  Strategy strategy = Strategy::LeftmostOutermost;
  std::uint64_t seed = 0;
  std::size_t budget = 100000;
};

/// The redex the strategy contracts next, or nothing on a normal form. For a
/// sup-elimination redex both branches are returned.
std::vector<std::pair<Step, Term>> next_steps(const Term& t, const ReduceOptions& opts,
                                              const Semiring& s = default_semiring(),
                                              std::mt19937_64* rng = nullptr);

/// Normal form of t. Throws SupBranchEncountered when the strategy reaches a
/// sup-elimination redex and ReductionBudgetExceeded after opts.budget steps.
Term normalize(const Term& t, const ReduceOptions& opts = {}, const Semiring& s = default_semiring());

struct Outcome {
  Scalar weight;
  Term value;
};

/// A multiset of weighted normal forms, in path order.
using Distribution = std::vector<Outcome>;

/// Every reduction path from t to a value, forking at sup-elimination
/// redexes. Uses an outermost strategy so branches are explored once each.
Distribution distribution(const Term& t, const Semiring& s = default_semiring(), const ReduceOptions& opts = {});

struct Path {
  std::vector<std::pair<Step, Term>> steps;
  Scalar weight;
  Term start;
  const Term& value() const { return steps.empty() ? start : steps.back().second; }
};

/// The paths behind distribution(t), with every intermediate term.
std::vector<Path> paths(const Term& t, const Semiring& s = default_semiring(), const ReduceOptions& opts = {});

/// Merges alpha-equivalent values, summing their weights; first occurrence order.
Distribution aggregate(const Distribution& d, const Semiring& s = default_semiring());
Scalar total_mass(const Distribution& d, const Semiring& s = default_semiring());

/// sum(...sum(scal(w1,v1), scal(w2,v2))..., scal(wn,vn)) with the elements in
/// lexicographic order of their printed form. Throws EmptyDistribution.
Term sum_of_distribution(const Distribution& d);

/// The closed-normal-form shape table: one -> star, top -> unit, & -> pair,
/// (o) -> sup, -o -> lam, (*) -> tens|sum|scal, (+) -> inl|inr|sum|scal; zero
/// has no closed normal form.
bool matches_introduction_shape(const Term& t, const Proposition& type);

}  // namespace supcalc
