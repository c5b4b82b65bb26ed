#include "supcalc/observe.hpp"

#include "supcalc/error.hpp"
#include "supcalc/matmodel.hpp"
#include "supcalc/typing.hpp"
#include "supcalc/veccodec.hpp"

namespace supcalc {

namespace {

struct Partial {
  Term body;
  Proposition type;
};

void extend(const Partial& k, std::size_t depth, const ArgumentSupplier& supply, std::vector<TermContext>& out) {
  if (k.type.is_basic()) {
    out.emplace_back(k.body);
    return;
  }
  if (depth == 0) return;
  const Proposition& a = k.type;
  auto go = [&](Term body, Proposition type) { extend({std::move(body), std::move(type)}, depth - 1, supply, out); };
  switch (a.kind()) {
    case PropKind::With:
      go(Term::fst(k.body), a.left());
      go(Term::snd(k.body), a.right());
      break;
    case PropKind::Sup:
      go(Term::supfst(k.body), a.left());
      go(Term::supsnd(k.body), a.right());
      break;
    case PropKind::Lollipop:
      for (auto& arg : supply(a.left())) go(Term::app(k.body, arg), a.right());
      break;
    case PropKind::Tensor: {
      auto target = Proposition::lollipop(a.left(), Proposition::lollipop(a.right(), Proposition::one()));
      for (auto& f : supply(target)) {
        go(Term::let_tens(k.body, "x", "y", Term::app(Term::app(f, Term::var("x")), Term::var("y"))),
           Proposition::one());
      }
      break;
    }
    case PropKind::Plus: {
      auto fs = supply(Proposition::lollipop(a.left(), Proposition::one()));
      auto gs = supply(Proposition::lollipop(a.right(), Proposition::one()));
      for (auto& f : fs) {
        for (auto& g : gs) {
          go(Term::case_of(k.body, "x", Term::app(f, Term::var("x")), "y", Term::app(g, Term::var("y"))),
             Proposition::one());
        }
      }
      break;
    }
    default: break;
  }
}

model::Mat filled(std::size_t rows, std::size_t cols, const Scalar& v, const Semiring& s) {
  return model::Mat(rows, cols, std::vector<Scalar>(rows * cols, v), s);
}

}  // namespace

bool mixed_equiv(const Term& t, const Term& u, const Proposition& a, const Semiring& s) {
  if (a.kind() == PropKind::Top) {
    typecheck(Context(), t, a);
    typecheck(Context(), u, a);
    return true;
  }
  if (!is_v(a)) throw UnsupportedType("observational comparison at " + a.to_string() + " is not decided");
  return expected_vector(t, a, s) == expected_vector(u, a, s);
}

std::vector<Term> default_arguments(const Proposition& a, const Semiring& s) {
  if (is_v(a)) {
    std::size_t n = dim_v(a);
    std::vector<Scalar> ones(n, s.one()), first(n, s.zero());
    first[0] = s.one();
    std::vector<Term> out{from_vector(std::move(ones), a)};
    if (n > 1) out.push_back(from_vector(std::move(first), a));
    return out;
  }
  if (a.kind() != PropKind::Lollipop) return {};
  const Proposition& from = a.left();
  const Proposition& to = a.right();
  if (is_v(from) && is_v(to)) {
    return {encode_matrix(filled(dim_v(to), dim_v(from), s.one(), s), from, to)};
  }
  if (is_v(from) && to.kind() == PropKind::Lollipop && is_v(to.left()) && to.right().kind() == PropKind::One) {
    auto one = Proposition::one();
    Term f = encode_matrix(filled(1, dim_v(from), s.one(), s), from, one);
    Term g = encode_matrix(filled(1, dim_v(to.left()), s.one(), s), to.left(), one);
    Term body = Term::unit_elim(Term::app(f, Term::var("x")), Term::app(g, Term::var("y")));
    return {Term::lam("x", Term::lam("y", body))};
  }
  return {};
}

std::vector<TermContext> enumerate_elim_contexts(const Proposition& a, std::size_t depth,
                                                 const ArgumentSupplier& supply) {
  std::vector<TermContext> out;
  extend({Term::hole(), a}, depth, supply, out);
  return out;
}

std::vector<TermContext> enumerate_elim_contexts(const Proposition& a, std::size_t depth, const Semiring& s) {
  return enumerate_elim_contexts(a, depth, [&s](const Proposition& p) { return default_arguments(p, s); });
}

}  // namespace supcalc
