#include "supcalc/veccodec.hpp"

#include "supcalc/error.hpp"
#include "supcalc/rewrite.hpp"
#include "supcalc/typing.hpp"

namespace supcalc {

namespace {

void read_vector(const Term& v, const Proposition& a, std::vector<Scalar>& out) {
  if (a.kind() == PropKind::One) {
    if (v.kind() != TermKind::Star) throw Error("expected a normal proof of one, got " + v.to_string());
    out.push_back(v.scalar());
    return;
  }
  if (v.kind() != TermKind::Pair) throw Error("expected a normal proof of " + a.to_string() + ", got " + v.to_string());
  read_vector(v.child(0), a.left(), out);
  read_vector(v.child(1), a.right(), out);
}

Term build(const std::vector<Scalar>& e, std::size_t& at, const Proposition& a) {
  if (a.kind() == PropKind::One) return Term::star(e[at++]);
  Term l = build(e, at, a.left());
  Term r = build(e, at, a.right());
  return Term::pair(std::move(l), std::move(r));
}

model::Mat columns(const model::Mat& m, std::size_t from, std::size_t count) {
  model::Mat out(m.rows(), count, m.semiring());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < count; ++j) out.set(i, j, m.at(i, from + j));
  }
  return out;
}

Term encode(const model::Mat& m, const Proposition& a, const Proposition& b) {
  if (a.kind() == PropKind::One) {
    std::vector<Scalar> col;
    for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(m.at(i, 0));
    return Term::lam("x", Term::unit_elim(Term::var("x"), from_vector(std::move(col), b)));
  }
  std::size_t left = dim_v(a.left());
  Term t1 = encode(columns(m, 0, left), a.left(), b);
  Term t2 = encode(columns(m, left, m.cols() - left), a.right(), b);
  return Term::lam("x", Term::sum(Term::app(std::move(t1), Term::fst(Term::var("x"))),
                                  Term::app(std::move(t2), Term::snd(Term::var("x")))));
}

void require_v(const Proposition& a) {
  if (!is_v(a)) throw NotInV(a.to_string() + " is not built from one and &");
}

}  // namespace

bool is_v(const Proposition& a) {
  switch (a.kind()) {
    case PropKind::One: return true;
    case PropKind::With: return is_v(a.left()) && is_v(a.right());
    default: return false;
  }
}

std::size_t dim_v(const Proposition& a) {
  require_v(a);
  if (a.kind() == PropKind::One) return 1;
  return dim_v(a.left()) + dim_v(a.right());
}

std::string SVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += entries[i].to_string();
  }
  return out + ")";
}

SVector to_vector(const Term& t, const Proposition& a, const Semiring& s) {
  require_v(a);
  typecheck(Context(), t, a);
  Term v = normalize(t, {}, s);
  SVector out{{}, a};
  read_vector(v, a, out.entries);
  return out;
}

SVector expected_vector(const Term& t, const Proposition& a, const Semiring& s) {
  require_v(a);
  typecheck(Context(), t, a);
  SVector out{std::vector<Scalar>(dim_v(a), s.zero()), a};
  for (const auto& o : distribution(t, s)) {
    std::vector<Scalar> v;
    read_vector(o.value, a, v);
    for (std::size_t i = 0; i < v.size(); ++i) out.entries[i] = s.add(out.entries[i], s.mul(o.weight, v[i]));
  }
  return out;
}

Term from_vector(const SVector& u) {
  std::size_t d = dim_v(u.prop);
  if (u.entries.size() != d) {
    throw LengthMismatch("vector of length " + std::to_string(u.entries.size()) + " for " + u.prop.to_string() +
                         " of dimension " + std::to_string(d));
  }
  std::size_t at = 0;
  return build(u.entries, at, u.prop);
}

Term encode_matrix(const model::Mat& m, const Proposition& a, const Proposition& b) {
  if (m.cols() != dim_v(a) || m.rows() != dim_v(b)) {
    throw ShapeMismatch("a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix cannot encode " +
                        a.to_string() + " -o " + b.to_string());
  }
  return encode(m, a, b);
}

model::Mat extract_linear_map(const Term& t, const Proposition& a, const Proposition& b, const Semiring& s) {
  std::size_t n = dim_v(a), m = dim_v(b);
  typecheck(Context(), t, Proposition::lollipop(a, b));
  model::Mat out(m, n, s);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Scalar> e(n, s.zero());
    e[j] = s.one();
    SVector col = to_vector(Term::app(t, from_vector(std::move(e), a)), b, s);
    for (std::size_t i = 0; i < m; ++i) out.set(i, j, col.entries[i]);
  }
  return out;
}

std::vector<Scalar> apply_matrix(const model::Mat& m, const std::vector<Scalar>& u) {
  if (u.size() != m.cols()) throw ShapeMismatch("vector length does not match matrix columns");
  const Semiring& s = m.semiring();
  std::vector<Scalar> out(m.rows(), s.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] = s.add(out[i], s.mul(m.at(i, j), u[j]));
  }
  return out;
}

}  // namespace supcalc
