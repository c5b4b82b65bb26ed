#include "supcalc/generator.hpp"

#include "supcalc/typing.hpp"

#include <stdexcept>

namespace supcalc {

namespace {

bool generable(const Proposition& a) {
  if (a.kind() == PropKind::Top || a.kind() == PropKind::Zero) return false;
  if (!a.is_binary()) return true;
  return generable(a.left()) && generable(a.right());
}

}  // namespace

TermGenerator::TermGenerator(std::uint64_t seed, GeneratorOptions opts, const Semiring& s)
    : rng_(seed), opts_(opts), s_(s) {}

bool TermGenerator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

std::size_t TermGenerator::below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

std::string TermGenerator::fresh() { return "v" + std::to_string(counter_++); }

Scalar TermGenerator::scalar() {
  if (s_.kind() == SemiringKind::Boolean) return Scalar(coin(0.5));
  static const char* pool[] = {"0", "1", "1/2", "1/4", "3/4", "2", "3"};
  return s_.from_literal(pool[below(7)]);
}

std::pair<Scalar, Scalar> TermGenerator::weights() {
  if (s_.kind() == SemiringKind::Boolean) {
    switch (below(3)) {
      case 0: return {Scalar(true), Scalar(false)};
      case 1: return {Scalar(false), Scalar(true)};
      default: return {Scalar(true), Scalar(true)};
    }
  }
  static const std::pair<const char*, const char*> pool[] = {
      {"1/2", "1/2"}, {"1/4", "3/4"}, {"3/4", "1/4"}, {"1", "0"}, {"0", "1"}};
  const auto& [p, q] = pool[below(5)];
  return {s_.from_literal(p), s_.from_literal(q)};
}

Proposition TermGenerator::random_type(std::size_t depth) {
  if (depth == 0 || coin(0.35)) return Proposition::one();
  static const PropKind kinds[] = {PropKind::Tensor, PropKind::Lollipop, PropKind::With, PropKind::Plus,
                                   PropKind::Sup};
  PropKind k = kinds[below(5)];
  Proposition l = random_type(depth - 1);
  Proposition r = random_type(depth - 1);
  return Proposition::binary(k, std::move(l), std::move(r));
}

Term TermGenerator::closed_term(const Proposition& goal) {
  if (!generable(goal)) throw std::invalid_argument("cannot generate terms of " + goal.to_string());
  counter_ = 0;
  return gen({}, goal, opts_.max_depth);
}

Generated TermGenerator::next() {
  for (;;) {
    Proposition a = random_type(opts_.type_depth);
    Term t = closed_term(a);
    if (t.size() < opts_.min_size || t.size() > opts_.max_size) continue;
    typecheck(Context(), t, a);
    return {std::move(t), std::move(a)};
  }
}

std::pair<TermGenerator::Ctx, TermGenerator::Ctx> TermGenerator::split(const Ctx& ctx) {
  Ctx a, b;
  for (const auto& v : ctx) (coin(0.5) ? a : b).push_back(v);
  return {std::move(a), std::move(b)};
}

Term TermGenerator::gen(Ctx ctx, const Proposition& goal, std::size_t depth) {
  if (ctx.size() == 1 && ctx[0].second == goal && (depth == 0 || coin(0.6))) return Term::var(ctx[0].first);
  if (depth == 0) {
    if (!ctx.empty()) return eliminate(std::move(ctx), below(ctx.size()), goal, 0);
    return intro(std::move(ctx), goal, 0);
  }
  std::size_t roll = below(100);
  if (!ctx.empty() && roll < 35) return eliminate(std::move(ctx), below(ctx.size()), goal, depth - 1);
  if (roll < 45) return Term::sum(gen(ctx, goal, depth - 1), gen(ctx, goal, depth - 1));
  if (roll < 52) return Term::scal(scalar(), gen(std::move(ctx), goal, depth - 1));
  if (roll < 67) return cut(std::move(ctx), goal, depth - 1);
  if (roll < 77 && !opts_.sup_free) return choice(std::move(ctx), goal, depth - 1);
  if (ctx.empty() || roll < 90) return intro(std::move(ctx), goal, depth == 0 ? 0 : depth - 1);
  return eliminate(std::move(ctx), below(ctx.size()), goal, depth - 1);
}

Term TermGenerator::intro(Ctx ctx, const Proposition& goal, std::size_t depth) {
  switch (goal.kind()) {
    case PropKind::One:
      if (ctx.empty()) return Term::star(scalar());
      return eliminate(std::move(ctx), below(ctx.size()), goal, depth);
    case PropKind::Tensor: {
      auto [a, b] = split(ctx);
      return Term::tens(gen(std::move(a), goal.left(), depth), gen(std::move(b), goal.right(), depth));
    }
    case PropKind::Lollipop: {
      std::string x = fresh();
      ctx.emplace_back(x, goal.left());
      return Term::lam(x, gen(std::move(ctx), goal.right(), depth));
    }
    case PropKind::With: return Term::pair(gen(ctx, goal.left(), depth), gen(ctx, goal.right(), depth));
    case PropKind::Sup: return Term::sup(gen(ctx, goal.left(), depth), gen(ctx, goal.right(), depth));
    case PropKind::Plus:
      return coin(0.5) ? Term::inl(gen(std::move(ctx), goal.left(), depth))
                       : Term::inr(gen(std::move(ctx), goal.right(), depth));
    default: throw std::invalid_argument("cannot generate terms of " + goal.to_string());
  }
}

Term TermGenerator::eliminate(Ctx ctx, std::size_t which, const Proposition& goal, std::size_t depth) {
  auto [x, b] = ctx[which];
  ctx.erase(ctx.begin() + static_cast<std::ptrdiff_t>(which));
  Term xv = Term::var(x);
  switch (b.kind()) {
    case PropKind::One: return Term::unit_elim(xv, gen(std::move(ctx), goal, depth));
    case PropKind::Tensor: {
      std::string l = fresh(), r = fresh();
      ctx.emplace_back(l, b.left());
      ctx.emplace_back(r, b.right());
      return Term::let_tens(xv, l, r, gen(std::move(ctx), goal, depth));
    }
    case PropKind::Plus:
    case PropKind::Sup: {
      std::string l = fresh(), r = fresh();
      Ctx lc{{l, b.left()}}, rc{{r, b.right()}};
      lc.insert(lc.end(), ctx.begin(), ctx.end());
      rc.insert(rc.end(), ctx.begin(), ctx.end());
      if (b.kind() == PropKind::Plus) return Term::case_of(xv, l, gen(lc, goal, depth), r, gen(rc, goal, depth));
      if (!opts_.sup_free && coin(0.5)) {
        auto [p, q] = weights();
        return Term::sup_elim(p, q, xv, l, gen(lc, goal, depth), r, gen(rc, goal, depth));
      }
      [[fallthrough]];
    }
    case PropKind::With: {
      bool first = coin(0.5);
      bool with = b.kind() == PropKind::With;
      Term proj = with ? (first ? Term::fst(xv) : Term::snd(xv)) : (first ? Term::supfst(xv) : Term::supsnd(xv));
      std::string y = fresh();
      ctx.emplace_back(y, first ? b.left() : b.right());
      return substitute(gen(std::move(ctx), goal, depth), y, proj);
    }
    case PropKind::Lollipop: {
      auto [arg_ctx, rest] = split(ctx);
      Term arg = gen(std::move(arg_ctx), b.left(), depth);
      std::string y = fresh();
      rest.emplace_back(y, b.right());
      return substitute(gen(std::move(rest), goal, depth), y, Term::app(xv, std::move(arg)));
    }
    default: throw std::logic_error("variable of type " + b.to_string() + " cannot be eliminated");
  }
}

Term TermGenerator::cut(Ctx ctx, const Proposition& goal, std::size_t depth) {
  Proposition b = random_type(1);
  auto [vc, rest] = split(ctx);
  Term v = gen(std::move(vc), b, depth);
  std::string y = fresh();
  rest.emplace_back(y, b);
  return Term::app(Term::lam(y, gen(std::move(rest), goal, depth)), std::move(v));
}

Term TermGenerator::choice(Ctx ctx, const Proposition& goal, std::size_t depth) {
  Proposition b1 = random_type(1), b2 = random_type(1);
  auto [sc, rest] = split(ctx);
  Term scrutinee = Term::sup(gen(sc, b1, depth), gen(sc, b2, depth));
  std::string l = fresh(), r = fresh();
  Ctx lc{{l, b1}}, rc{{r, b2}};
  lc.insert(lc.end(), rest.begin(), rest.end());
  rc.insert(rc.end(), rest.begin(), rest.end());
  auto [p, q] = weights();
  return Term::sup_elim(p, q, std::move(scrutinee), l, gen(lc, goal, depth), r, gen(rc, goal, depth));
}

}  // namespace supcalc
