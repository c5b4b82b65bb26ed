#pragma once

#include "supcalc/matmodel.hpp"
#include "supcalc/proposition.hpp"
#include "supcalc/semiring.hpp"
#include "supcalc/term.hpp"

#include <cstddef>
#include <string>
#include <vector>

/// Closed irreducible proofs of propositions built from `one` and `&` are
/// vectors; proofs of A -o B between such propositions are matrices.
namespace supcalc {

/// Built only from `one` and `&`.
bool is_v(const Proposition& a);
/// Number of `one` leaves. Throws NotInV.
std::size_t dim_v(const Proposition& a);

struct SVector {
  std::vector<Scalar> entries;
  Proposition prop = Proposition::one();

  std::string to_string() const;
  friend bool operator==(const SVector& a, const SVector& b) {
    return a.prop == b.prop && a.entries == b.entries;
  }
};

/// Normalizes the closed term t : A and reads off its vector, blocks in
/// left-to-right order. Throws NotInV, TypeError, or SupBranchEncountered when
/// t does not reduce deterministically.
SVector to_vector(const Term& t, const Proposition& a, const Semiring& s = default_semiring());

/// The weighted sum of the vectors of every outcome of t's distribution. For a
/// term without sup-elimination redexes this is to_vector.
SVector expected_vector(const Term& t, const Proposition& a, const Semiring& s = default_semiring());

/// The irreducible proof with these entries. Throws LengthMismatch, NotInV.
Term from_vector(const SVector& u);
inline Term from_vector(std::vector<Scalar> entries, const Proposition& a) {
  return from_vector(SVector{std::move(entries), a});
}

/// A closed proof of A -o B whose application to u normalizes to M.u.
/// M has dim_v(B) rows and dim_v(A) columns. Throws ShapeMismatch, NotInV.
Term encode_matrix(const model::Mat& m, const Proposition& a, const Proposition& b);

/// Column j is the vector of app(t, e_j). Throws TypeError unless t : A -o B.
model::Mat extract_linear_map(const Term& t, const Proposition& a, const Proposition& b,
                              const Semiring& s = default_semiring());

/// M.u over the semiring of M. Throws ShapeMismatch.
std::vector<Scalar> apply_matrix(const model::Mat& m, const std::vector<Scalar>& u);

}  // namespace supcalc
