#pragma once

#include "supcalc/semiring.hpp"

#include <cstddef>
#include <string>
#include <vector>

/// The free finite-dimensional semimodule model: objects are dimensions,
/// morphisms S^cols -> S^rows are dense row-major matrices.
///
/// Index conventions, shared by every structural map:
///   A (*) B      pair (a, b) at a * dim(B) + b
///   A (+) B      a at a, b at dim(A) + b
///   hom(A, B)    entry (i, j), i in B and j in A, at i * dim(A) + j
namespace supcalc::model {

struct Obj {
  std::size_t dim = 0;
  friend bool operator==(Obj a, Obj b) { return a.dim == b.dim; }
};

inline Obj unit_obj() { return Obj{1}; }
inline Obj zero_obj() { return Obj{0}; }

class Mat {
 public:
  /// All-zero rows x cols matrix.
  Mat(std::size_t rows, std::size_t cols, const Semiring& s = default_semiring());
  Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries, const Semiring& s = default_semiring());

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Obj dom() const { return Obj{cols_}; }
  Obj cod() const { return Obj{rows_}; }
  const Semiring& semiring() const { return *s_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Scalar v) { e_[i * cols_ + j] = std::move(v); }
  const std::vector<Scalar>& entries() const { return e_; }

  /// Rows separated by newlines, entries by spaces.
  std::string to_string() const;

  /// Same shape and entrywise equal (tolerance on the float carrier).
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> e_;
  const Semiring* s_;
};

Mat identity(Obj a, const Semiring& s = default_semiring());
/// The zero map A -> B (dim B rows, dim A columns).
Mat zero_mat(Obj a, Obj b, const Semiring& s = default_semiring());
/// The 1x1 matrix [s]: the scalar as an endomorphism of I.
Mat embed(const Scalar& x, const Semiring& s = default_semiring());

/// g after f. Throws ShapeMismatch unless cols(g) = rows(f).
Mat compose(const Mat& g, const Mat& f);
/// Entrywise sum. Throws ShapeMismatch.
Mat add(const Mat& f, const Mat& g);
/// Every entry multiplied by x.
Mat scale(const Scalar& x, const Mat& f);

Obj tensor_obj(Obj a, Obj b);
/// Kronecker product.
Mat tensor_mat(const Mat& f, const Mat& g);

Obj biproduct_obj(Obj a, Obj b);
/// Block diagonal.
Mat biproduct_mat(const Mat& f, const Mat& g);
Mat inj1(Obj a, Obj b, const Semiring& s = default_semiring());
Mat inj2(Obj a, Obj b, const Semiring& s = default_semiring());
Mat proj1(Obj a, Obj b, const Semiring& s = default_semiring());
Mat proj2(Obj a, Obj b, const Semiring& s = default_semiring());
/// <f, g> : C -> A (+) B, stacking rows. Throws ShapeMismatch.
Mat pair(const Mat& f, const Mat& g);
/// [f, g] : A (+) B -> C, concatenating columns. Throws ShapeMismatch.
Mat copair(const Mat& f, const Mat& g);
Mat diag(Obj a, const Semiring& s = default_semiring());
Mat codiag(Obj a, const Semiring& s = default_semiring());

Obj hom_obj(Obj a, Obj b);
/// hom(A, g) : hom(A, B) -> hom(A, C) for g : B -> C, i.e. post-composition.
Mat hom_map(Obj a, const Mat& g);
/// curry(f)[z * dim X + x, y] = f[z, x * dim Y + y]: Hom(X (*) Y, Z) to Hom(Y, hom(X, Z)).
Mat curry(const Mat& f, Obj x, Obj y, Obj z);
Mat uncurry(const Mat& g, Obj x, Obj y, Obj z);
/// hom(A, B) (*) A -> B.
Mat eval_map(Obj a, Obj b, const Semiring& s = default_semiring());
/// G -> hom(A, G (*) A).
Mat unit_map(Obj g, Obj a, const Semiring& s = default_semiring());

enum class Coherence { Sigma, Alpha, AlphaInv, LambdaU, LambdaInv, RhoU, RhoInv };

/// sigma, alpha, alpha_inv take (A, B[, C]); the unitors take (A). Throws
/// std::invalid_argument on the wrong arity.
Mat coherence(Coherence kind, const std::vector<Obj>& objs, const Semiring& s = default_semiring());
Mat sigma(Obj a, Obj b, const Semiring& s = default_semiring());
/// The swap A (+) B -> B (+) A.
Mat biproduct_swap(Obj a, Obj b, const Semiring& s = default_semiring());

/// Multiplication by x on A: x times the identity.
Mat scalar_map(const Scalar& x, Obj a, const Semiring& s = default_semiring());
/// The same map built as rho . (Id (*) [x]) . rho^-1.
Mat scalar_map_via_unit(const Scalar& x, Obj a, const Semiring& s = default_semiring());

/// [p.Id | q.Id] : A (+) A -> A. The pair need not lie in the weight set.
Mat weighted_codiag(const Scalar& p, const Scalar& q, Obj a, const Semiring& s = default_semiring());
Mat weighted_codiag(const WeightPair& w, Obj a, const Semiring& s = default_semiring());

enum class Distributor { D, DInv, Gamma, GammaInv, Delta };

/// d, d_inv : (A (+) B) (*) C <-> (A (*) C) (+) (B (*) C)
/// gamma, gamma_inv : hom(A, B (+) C) <-> hom(A, B) (+) hom(A, C)
/// delta : (A (+) B) (+) C -> (A (+) C) (+) (B (+) C)
Mat distribute(Distributor kind, Obj a, Obj b, Obj c, const Semiring& s = default_semiring());

}  // namespace supcalc::model
