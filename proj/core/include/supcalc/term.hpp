#pragma once

#include "supcalc/scalar.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace supcalc {

enum class TermKind : std::uint8_t {
  Var,
  Hole,  // the distinguished hole of a TermContext
  Sum,
  Scal,
  Star,
  UnitElim,
  Lam,
  App,
  Tens,
  LetTens,
  Unit,
  ZeroElim,
  Pair,
  Fst,
  Snd,
  Inl,
  Inr,
  Case,
  SupPair,
  SupFst,
  SupSnd,
  SupElim,
};

const char* keyword(TermKind kind);

/// A proof-term of the calculus.
///
/// Terms are immutable trees with shared children. Layout by kind:
///   Var                 names[0]
///   Lam                 names[0] bound in child 0
///   LetTens(t,x,y,u)    children {t,u}, names {x,y} bound in u
///   Case(t,x.u,y.v)     children {t,u,v}, x bound in u, y bound in v
///   SupElim{p,q}(...)   as Case, scalars {p,q}
///   Scal(s,t), Star(s)  scalars[0] = s
class Term {
 public:
  static Term var(std::string name);
  static Term hole();
  static Term sum(Term t, Term u);
  static Term scal(Scalar s, Term t);
  static Term star(Scalar s);
  static Term unit_elim(Term t, Term u);
  static Term lam(std::string x, Term body);
  static Term app(Term t, Term u);
  static Term tens(Term t, Term u);
  static Term let_tens(Term t, std::string x, std::string y, Term u);
  static Term unit();
  static Term zero_elim(Term t);
  static Term pair(Term t, Term u);
  static Term fst(Term t);
  static Term snd(Term t);
  static Term inl(Term t);
  static Term inr(Term t);
  static Term case_of(Term t, std::string x, Term u, std::string y, Term v);
  static Term sup(Term t, Term u);
  static Term supfst(Term t);
  static Term supsnd(Term t);
  /// Throws WeightError unless p + q is the unit of the carrier of p and q.
  static Term sup_elim(Scalar p, Scalar q, Term t, std::string x, Term u, std::string y, Term v);

  /// Same constructor, names and scalars as `like`, with new children.
  static Term rebuild(const Term& like, std::vector<Term> children);
  /// Same constructor and children as `like`, with new binder names.
  static Term rename_binders(const Term& like, std::vector<std::string> names);
  /// Same constructor, names and children as `like`, with new scalars.
  static Term with_scalars(const Term& like, std::vector<Scalar> scalars);

  TermKind kind() const;
  std::size_t arity() const;
  const Term& child(std::size_t i) const;
  const std::vector<Term>& children() const;
  const std::string& name(std::size_t i = 0) const;
  const std::vector<std::string>& names() const;
  const Scalar& scalar(std::size_t i = 0) const;
  const std::vector<Scalar>& scalars() const;

  bool is_binder() const;
  /// Indices into names() that are bound inside child i.
  std::vector<std::size_t> bound_in_child(std::size_t i) const;

  std::size_t size() const;
  bool same_node(const Term& other) const { return node_ == other.node_; }

  /// Concrete syntax; parse(to_string(t)) is alpha-equivalent to t.
  std::string to_string() const;

  /// Structural equality (binder names significant). See alpha_equal.
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  static Term make(TermKind kind, std::vector<Term> children, std::vector<std::string> names,
                   std::vector<Scalar> scalars);
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_vars(const Term& t);
bool occurs_free(const std::string& x, const Term& t);
/// Number of free occurrences of x.
std::size_t count_free(const std::string& x, const Term& t);

/// Capture-avoiding (value/x)target.
Term substitute(const Term& target, const std::string& x, const Term& value);
/// Simultaneous capture-avoiding substitution.
Term substitute(const Term& target, const std::map<std::string, Term>& values);

bool alpha_equal(const Term& a, const Term& b);

/// base, base', base'', ... first one not in avoid.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

/// Renames every binder that clashes with `avoid` or with an enclosing binder.
Term freshen_binders(const Term& t, std::set<std::string> avoid);

/// Path of child indices from the root.
using Position = std::vector<std::size_t>;
std::string to_string(const Position& p);
const Term& subterm_at(const Term& t, const Position& pos);
Term replace_at(const Term& t, const Position& pos, Term replacement);

std::size_t hole_count(const Term& t);

/// A term with exactly one hole. Filling is textual: the hole is not a binder
/// and no capture avoidance is performed.
class TermContext {
 public:
  /// Throws Error unless `body` has exactly one hole.
  explicit TermContext(Term body);
  static TermContext empty() { return TermContext(Term::hole()); }

  const Term& body() const { return body_; }
  Term fill(const Term& t) const;
  /// Plugs `inner` into this context's hole.
  TermContext compose(const TermContext& inner) const;
  std::string to_string() const { return body_.to_string(); }

 private:
  Term body_;
};

}  // namespace supcalc
