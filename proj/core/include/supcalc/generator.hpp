#pragma once

#include "supcalc/proposition.hpp"
#include "supcalc/semiring.hpp"
#include "supcalc/term.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace supcalc {

struct GeneratorOptions {
  /// Random choices stop at this depth; below it the term is finished by the
  /// shortest construction the goal and the remaining variables allow.
  std::size_t max_depth = 6;
  /// Depth of randomly drawn propositions.
  std::size_t type_depth = 2;
  /// Never emit sup_elim.
  bool sup_free = false;
  /// next() redraws terms with fewer or more nodes than these.
  std::size_t min_size = 8;
  std::size_t max_size = 60;
};

struct Generated {
  Term term;
  Proposition type;
};

/// Random closed well-typed terms, built top-down from a goal proposition.
///
/// Propositions are drawn from one, (*), -o, &, (+), (o); top and zero never
/// appear as binder types, so every variable can be eliminated. Terms contain
/// deliberate redexes (applied lambdas, projected pairs, weighted choices).
/// Scalars come from {0, 1, 1/2, 1/4, 3/4, 2, 3} mapped into the semiring.
class TermGenerator {
 public:
  explicit TermGenerator(std::uint64_t seed, GeneratorOptions opts = {}, const Semiring& s = default_semiring());

  Proposition random_type(std::size_t depth);
  /// Throws std::invalid_argument if goal mentions top or zero.
  Term closed_term(const Proposition& goal);
  Generated next();

 private:
  using Ctx = std::vector<std::pair<std::string, Proposition>>;

  Term gen(Ctx ctx, const Proposition& goal, std::size_t depth);
  Term intro(Ctx ctx, const Proposition& goal, std::size_t depth);
  Term eliminate(Ctx ctx, std::size_t which, const Proposition& goal, std::size_t depth);
  Term cut(Ctx ctx, const Proposition& goal, std::size_t depth);
  Term choice(Ctx ctx, const Proposition& goal, std::size_t depth);

  std::pair<Ctx, Ctx> split(const Ctx& ctx);
  std::string fresh();
  Scalar scalar();
  std::pair<Scalar, Scalar> weights();
  bool coin(double p);
  std::size_t below(std::size_t n);

  std::mt19937_64 rng_;
  GeneratorOptions opts_;
  const Semiring& s_;
  std::size_t counter_ = 0;
};

}  // namespace supcalc
