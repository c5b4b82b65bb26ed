#pragma once

#include "supcalc/proposition.hpp"
#include "supcalc/semiring.hpp"
#include "supcalc/term.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace supcalc {

/// Whether closed t and u of type A agree on every observation: their
/// distributions, each weighted outcome read as a vector and summed, coincide.
/// Decided for A built from `one` and `&`, and for `top`. Throws
/// UnsupportedType for any other A, TypeError if either term is not of type A.
bool mixed_equiv(const Term& t, const Term& u, const Proposition& a, const Semiring& s = default_semiring());

/// Closed terms of a requested type, used to fill the arguments of elimination
/// contexts. May return nothing for types it cannot inhabit.
using ArgumentSupplier = std::function<std::vector<Term>(const Proposition&)>;

/// Inhabits propositions built from `one` and `&`, maps between them, and
/// curried two-argument maps between them into `one`.
std::vector<Term> default_arguments(const Proposition& a, const Semiring& s = default_semiring());

/// Elimination contexts with a hole of type A and a basic result type, with at
/// most `depth` eliminators. Arguments come from `supply`; a let_tens or case
/// consumes its bound variables through supplied maps into `one`.
std::vector<TermContext> enumerate_elim_contexts(const Proposition& a, std::size_t depth,
                                                 const ArgumentSupplier& supply);
std::vector<TermContext> enumerate_elim_contexts(const Proposition& a, std::size_t depth,
                                                 const Semiring& s = default_semiring());

}  // namespace supcalc
