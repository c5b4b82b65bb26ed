#include "supcalc/typing.hpp"

#include "supcalc/error.hpp"
#include "supcalc/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace supcalc {

const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::Ax: return "ax";
    case Rule::Sum: return "sum";
    case Rule::Scal: return "scal";
    case Rule::OneI: return "1i";
    case Rule::OneE: return "1e";
    case Rule::TensorI: return "tensor_i";
    case Rule::TensorE: return "tensor_e";
    case Rule::LollipopI: return "lollipop_i";
    case Rule::LollipopE: return "lollipop_e";
    case Rule::TopI: return "top_i";
    case Rule::ZeroE: return "zero_e";
    case Rule::WithI: return "with_i";
    case Rule::WithE1: return "with_e1";
    case Rule::WithE2: return "with_e2";
    case Rule::PlusI1: return "plus_i1";
    case Rule::PlusI2: return "plus_i2";
    case Rule::PlusE: return "plus_e";
    case Rule::SupI: return "sup_i";
    case Rule::SupE1: return "sup_e1";
    case Rule::SupE2: return "sup_e2";
    case Rule::SupE: return "sup_e";
  }
  return "?";
}

std::vector<Rule> all_rules() {
  std::vector<Rule> out;
  for (std::size_t i = 0; i < kRuleCount; ++i) out.push_back(static_cast<Rule>(i));
  return out;
}

std::vector<std::size_t> SplitPlan::first() const {
  return {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(first_size)};
}

std::vector<std::size_t> SplitPlan::second() const {
  return {order.begin() + static_cast<std::ptrdiff_t>(first_size), order.end()};
}

std::size_t Derivation::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

bool absorbs(const Term& t) {
  switch (t.kind()) {
    case TermKind::Unit:
    case TermKind::ZeroElim: return true;
    case TermKind::Var:
    case TermKind::Hole:
    case TermKind::Star: return false;
    case TermKind::Sum:
    case TermKind::Pair:
    case TermKind::SupPair: return absorbs(t.child(0)) && absorbs(t.child(1));
    case TermKind::Scal:
    case TermKind::Lam:
    case TermKind::Fst:
    case TermKind::Snd:
    case TermKind::Inl:
    case TermKind::Inr:
    case TermKind::SupFst:
    case TermKind::SupSnd: return absorbs(t.child(0));
    case TermKind::UnitElim:
    case TermKind::App:
    case TermKind::Tens:
    case TermKind::LetTens: return absorbs(t.child(0)) || absorbs(t.child(1));
    case TermKind::Case:
    case TermKind::SupElim:
      return absorbs(t.child(0)) || (absorbs(t.child(1)) && absorbs(t.child(2)));
  }
  return false;
}

namespace {

// ---------------------------------------------------------------------------
// Types with metavariables, solved by union-find unification.

using TypeId = std::size_t;

class Solver {
 public:
  TypeId meta() {
    nodes_.push_back(Node{true, PropKind::One, 0, 0, nodes_.size()});
    return nodes_.size() - 1;
  }

  TypeId con(PropKind kind, TypeId l = 0, TypeId r = 0) {
    nodes_.push_back(Node{false, kind, l, r, nodes_.size()});
    return nodes_.size() - 1;
  }

  TypeId lift(const Proposition& p) {
    if (!p.is_binary()) return con(p.kind());
    TypeId l = lift(p.left());
    TypeId r = lift(p.right());
    return con(p.kind(), l, r);
  }

  TypeId find(TypeId t) {
    while (nodes_[t].parent != t) {
      nodes_[t].parent = nodes_[nodes_[t].parent].parent;
      t = nodes_[t].parent;
    }
    return t;
  }

  bool unify(TypeId a, TypeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    if (nodes_[a].is_meta) return bind(a, b);
    if (nodes_[b].is_meta) return bind(b, a);
    if (nodes_[a].kind != nodes_[b].kind) return false;
    if (!is_binary(nodes_[a].kind)) return true;
    TypeId al = nodes_[a].left, ar = nodes_[a].right, bl = nodes_[b].left, br = nodes_[b].right;
    return unify(al, bl) && unify(ar, br);
  }

  /// Unresolved metavariables read as `one`.
  Proposition resolve(TypeId t) {
    t = find(t);
    const Node n = nodes_[t];
    if (n.is_meta) return Proposition::one();
    if (!is_binary(n.kind)) return nullary(n.kind);
    return Proposition::binary(n.kind, resolve(n.left), resolve(n.right));
  }

  std::string show(TypeId t) {
    t = find(t);
    const Node n = nodes_[t];
    if (n.is_meta) return "?" + std::to_string(t);
    if (!is_binary(n.kind)) return connective_symbol(n.kind);
    auto operand = [&](TypeId c) {
      std::string s = show(c);
      const Node& cn = nodes_[find(c)];
      return (!cn.is_meta && is_binary(cn.kind)) ? "(" + s + ")" : s;
    };
    return operand(n.left) + " " + connective_symbol(n.kind) + " " + operand(n.right);
  }

 private:
  struct Node {
    bool is_meta;
    PropKind kind;
    TypeId left, right;
    TypeId parent;
  };

  static bool is_binary(PropKind k) {
    return k != PropKind::One && k != PropKind::Top && k != PropKind::Zero;
  }

  static Proposition nullary(PropKind k) {
    if (k == PropKind::Top) return Proposition::top();
    if (k == PropKind::Zero) return Proposition::zero();
    return Proposition::one();
  }

  bool occurs(TypeId m, TypeId t) {
    t = find(t);
    if (t == m) return true;
    const Node n = nodes_[t];
    if (n.is_meta || !is_binary(n.kind)) return false;
    return occurs(m, n.left) || occurs(m, n.right);
  }

  bool bind(TypeId m, TypeId t) {
    if (occurs(m, t)) return false;
    nodes_[m].parent = t;
    return true;
  }

  std::vector<Node> nodes_;
};

// ---------------------------------------------------------------------------
// First pass: derivation skeleton over metavariable types.

struct MBinding {
  std::string name;
  TypeId type;
};
using MContext = std::vector<MBinding>;

struct MDerivation {
  Rule rule;
  MContext context;
  Term term;
  TypeId type;
  std::vector<MDerivation> premises;
  std::optional<SplitPlan> split;
};

std::string names_of(const MContext& ctx, const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ", ";
    out += ctx[idx[i]].name;
  }
  return out;
}

class Inferencer {
 public:
  explicit Inferencer(Solver& s) : s_(s) {}

  MDerivation infer(const MContext& ctx, const Term& t) {
    switch (t.kind()) {
      case TermKind::Var: {
        if (ctx.size() != 1 || ctx[0].name != t.name()) {
          std::vector<std::size_t> extra;
          for (std::size_t i = 0; i < ctx.size(); ++i) {
            if (ctx[i].name != t.name()) extra.push_back(i);
          }
          throw TypeError(TypeErrorKind::LinearViolation,
                          "variable(s) " + names_of(ctx, extra) + " unused at '" + t.name() + "'");
        }
        return leaf(Rule::Ax, ctx, t, ctx[0].type);
      }
      case TermKind::Hole:
        throw TypeError(TypeErrorKind::TypeMismatch, "a term context hole has no type");
      case TermKind::Star:
        require_empty(ctx, t);
        return leaf(Rule::OneI, ctx, t, s_.con(PropKind::One));
      case TermKind::Unit: return leaf(Rule::TopI, ctx, t, s_.con(PropKind::Top));
      case TermKind::Sum: {
        auto a = infer(ctx, t.child(0));
        auto b = infer(ctx, t.child(1));
        expect(a.type, b.type, t, "summands must have the same type");
        TypeId ty = a.type;
        return node(Rule::Sum, ctx, t, ty, {std::move(a), std::move(b)});
      }
      case TermKind::Scal: {
        auto a = infer(ctx, t.child(0));
        TypeId ty = a.type;
        return node(Rule::Scal, ctx, t, ty, {std::move(a)});
      }
      case TermKind::UnitElim: {
        auto plan = split(ctx, {part(t.child(0)), part(t.child(1))}, t);
        auto a = infer(pick(ctx, plan.first()), t.child(0));
        auto b = infer(pick(ctx, plan.second()), t.child(1));
        expect(a.type, s_.con(PropKind::One), t, "the first argument of unit_elim must have type one");
        TypeId ty = b.type;
        return node(Rule::OneE, ctx, t, ty, {std::move(a), std::move(b)}, std::move(plan));
      }
      case TermKind::Tens: {
        auto plan = split(ctx, {part(t.child(0)), part(t.child(1))}, t);
        auto a = infer(pick(ctx, plan.first()), t.child(0));
        auto b = infer(pick(ctx, plan.second()), t.child(1));
        TypeId ty = s_.con(PropKind::Tensor, a.type, b.type);
        return node(Rule::TensorI, ctx, t, ty, {std::move(a), std::move(b)}, std::move(plan));
      }
      case TermKind::LetTens: {
        Part cont = part(t.child(1), {t.name(0), t.name(1)});
        auto plan = split(ctx, {cont, part(t.child(0))}, t);
        auto a = infer(pick(ctx, plan.second()), t.child(0));
        TypeId x = s_.meta(), y = s_.meta();
        expect(a.type, s_.con(PropKind::Tensor, x, y), t, "let_tens needs a tensor");
        MContext inner = pick(ctx, plan.first());
        inner.push_back({t.name(0), x});
        inner.push_back({t.name(1), y});
        auto b = infer(inner, t.child(1));
        TypeId ty = b.type;
        return node(Rule::TensorE, ctx, t, ty, {std::move(a), std::move(b)}, std::move(plan));
      }
      case TermKind::Lam: {
        TypeId x = s_.meta();
        MContext inner = ctx;
        inner.push_back({t.name(0), x});
        auto a = infer(inner, t.child(0));
        TypeId ty = s_.con(PropKind::Lollipop, x, a.type);
        return node(Rule::LollipopI, ctx, t, ty, {std::move(a)});
      }
      case TermKind::App: {
        auto plan = split(ctx, {part(t.child(0)), part(t.child(1))}, t);
        auto f = infer(pick(ctx, plan.first()), t.child(0));
        auto a = infer(pick(ctx, plan.second()), t.child(1));
        TypeId result = s_.meta();
        expect(f.type, s_.con(PropKind::Lollipop, a.type, result), t,
               "function and argument types do not match");
        return node(Rule::LollipopE, ctx, t, result, {std::move(f), std::move(a)}, std::move(plan));
      }
      case TermKind::ZeroElim: {
        Part used = part(t.child(0));
        used.absorbing = false;  // leftovers always go to the absorbed part
        auto plan = split(ctx, {used, Part{{}, true}}, t);
        auto a = infer(pick(ctx, plan.first()), t.child(0));
        expect(a.type, s_.con(PropKind::Zero), t, "zero_elim needs type zero");
        return node(Rule::ZeroE, ctx, t, s_.meta(), {std::move(a)}, std::move(plan));
      }
      case TermKind::Pair:
      case TermKind::SupPair: {
        auto a = infer(ctx, t.child(0));
        auto b = infer(ctx, t.child(1));
        bool with = t.kind() == TermKind::Pair;
        TypeId ty = s_.con(with ? PropKind::With : PropKind::Sup, a.type, b.type);
        return node(with ? Rule::WithI : Rule::SupI, ctx, t, ty, {std::move(a), std::move(b)});
      }
      case TermKind::Fst:
      case TermKind::Snd:
      case TermKind::SupFst:
      case TermKind::SupSnd: {
        bool with = t.kind() == TermKind::Fst || t.kind() == TermKind::Snd;
        bool first = t.kind() == TermKind::Fst || t.kind() == TermKind::SupFst;
        auto a = infer(ctx, t.child(0));
        TypeId l = s_.meta(), r = s_.meta();
        expect(a.type, s_.con(with ? PropKind::With : PropKind::Sup, l, r), t,
               with ? "projection needs an & type" : "sup projection needs a (o) type");
        Rule rule = with ? (first ? Rule::WithE1 : Rule::WithE2) : (first ? Rule::SupE1 : Rule::SupE2);
        return node(rule, ctx, t, first ? l : r, {std::move(a)});
      }
      case TermKind::Inl:
      case TermKind::Inr: {
        auto a = infer(ctx, t.child(0));
        TypeId other = s_.meta();
        bool left = t.kind() == TermKind::Inl;
        TypeId ty = left ? s_.con(PropKind::Plus, a.type, other) : s_.con(PropKind::Plus, other, a.type);
        return node(left ? Rule::PlusI1 : Rule::PlusI2, ctx, t, ty, {std::move(a)});
      }
      case TermKind::Case:
      case TermKind::SupElim: {
        bool plus = t.kind() == TermKind::Case;
        Part branches = part(t.child(1), {t.name(0)});
        Part right = part(t.child(2), {t.name(1)});
        branches.free.insert(right.free.begin(), right.free.end());
        branches.absorbing = branches.absorbing && right.absorbing;
        auto plan = split(ctx, {part(t.child(0)), branches}, t);
        auto s = infer(pick(ctx, plan.first()), t.child(0));
        TypeId a = s_.meta(), b = s_.meta();
        expect(s.type, s_.con(plus ? PropKind::Plus : PropKind::Sup, a, b), t,
               plus ? "case needs a (+) type" : "sup_elim needs a (o) type");
        MContext shared = pick(ctx, plan.second());
        MContext left_ctx{{t.name(0), a}};
        left_ctx.insert(left_ctx.end(), shared.begin(), shared.end());
        MContext right_ctx{{t.name(1), b}};
        right_ctx.insert(right_ctx.end(), shared.begin(), shared.end());
        auto u = infer(left_ctx, t.child(1));
        auto v = infer(right_ctx, t.child(2));
        expect(u.type, v.type, t, "branches must have the same type");
        TypeId ty = u.type;
        return node(plus ? Rule::PlusE : Rule::SupE, ctx, t, ty, {std::move(s), std::move(u), std::move(v)},
                    std::move(plan));
      }
    }
    throw TypeError(TypeErrorKind::TypeMismatch, "unknown term");
  }

 private:
  struct Part {
    std::set<std::string> free;
    bool absorbing;
  };

  static Part part(const Term& t, std::initializer_list<std::string> bound = {}) {
    Part p{free_vars(t), absorbs(t)};
    for (const auto& b : bound) p.free.erase(b);
    return p;
  }

  SplitPlan split(const MContext& ctx, const std::vector<Part>& parts, const Term& t) {
    std::vector<std::size_t> first, second;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const std::string& x = ctx[i].name;
      bool in0 = parts[0].free.count(x) > 0;
      bool in1 = parts[1].free.count(x) > 0;
      if (in0 && in1) {
        throw TypeError(TypeErrorKind::LinearViolation,
                        "variable '" + x + "' is used by both parts of " + t.to_string());
      }
      if (in0) {
        first.push_back(i);
      } else if (in1) {
        second.push_back(i);
      } else if (parts[0].absorbing) {
        first.push_back(i);
      } else if (parts[1].absorbing) {
        second.push_back(i);
      } else {
        throw TypeError(TypeErrorKind::LinearViolation,
                        "variable '" + x + "' is unused in " + t.to_string());
      }
    }
    SplitPlan plan;
    plan.first_size = first.size();
    plan.order = std::move(first);
    plan.order.insert(plan.order.end(), second.begin(), second.end());
    return plan;
  }

  static MContext pick(const MContext& ctx, const std::vector<std::size_t>& idx) {
    MContext out;
    for (auto i : idx) out.push_back(ctx[i]);
    return out;
  }

  void require_empty(const MContext& ctx, const Term& t) {
    if (ctx.empty()) return;
    std::vector<std::size_t> all(ctx.size());
    std::iota(all.begin(), all.end(), 0);
    throw TypeError(TypeErrorKind::LinearViolation,
                    "variable(s) " + names_of(ctx, all) + " unused at " + t.to_string());
  }

  void expect(TypeId got, TypeId want, const Term& t, const std::string& what) {
    std::string before_got = s_.show(got), before_want = s_.show(want);
    if (!s_.unify(got, want)) {
      throw TypeError(TypeErrorKind::TypeMismatch,
                      what + " in " + t.to_string() + " (" + before_got + " vs " + before_want + ")");
    }
  }

  static MDerivation leaf(Rule r, const MContext& ctx, const Term& t, TypeId ty) {
    return MDerivation{r, ctx, t, ty, {}, std::nullopt};
  }

  static MDerivation node(Rule r, const MContext& ctx, const Term& t, TypeId ty,
                          std::vector<MDerivation> premises, std::optional<SplitPlan> plan = std::nullopt) {
    return MDerivation{r, ctx, t, ty, std::move(premises), std::move(plan)};
  }

  Solver& s_;
};

Derivation resolve(Solver& s, const MDerivation& m) {
  std::vector<Context::Binding> bindings;
  for (const auto& b : m.context) bindings.emplace_back(b.name, s.resolve(b.type));
  std::vector<Derivation> premises;
  for (const auto& p : m.premises) premises.push_back(resolve(s, p));
  return Derivation{m.rule, Context(std::move(bindings)), m.term, s.resolve(m.type), std::move(premises),
                    m.split};
}

}  // namespace

Derivation typecheck(const Context& ctx, const Term& t, const std::optional<Proposition>& expected) {
  for (const auto& x : free_vars(t)) {
    if (!ctx.contains(x)) throw TypeError(TypeErrorKind::UnboundVariable, "variable '" + x + "' is not in the context");
  }
  if (t.kind() == TermKind::SupElim && !(t.scalar(0) + t.scalar(1)).is_one()) {
    throw TypeError(TypeErrorKind::WeightError, "sup_elim weights do not sum to 1");
  }
  auto names = ctx.names();
  Term term = freshen_binders(t, std::set<std::string>(names.begin(), names.end()));

  Solver solver;
  MContext mctx;
  for (const auto& [name, type] : ctx) mctx.push_back({name, solver.lift(type)});
  Inferencer inf(solver);
  MDerivation m = inf.infer(mctx, term);
  if (expected) {
    std::string got = solver.show(m.type);
    if (!solver.unify(m.type, solver.lift(*expected))) {
      throw TypeError(TypeErrorKind::TypeMismatch,
                      "expected " + expected->to_string() + " but the term has type " + got);
    }
  }
  return resolve(solver, m);
}

// ---------------------------------------------------------------------------

namespace {

class Validator {
 public:
  Diagnosis run(const Derivation& d) {
    visit(d, "root");
    return diag_;
  }

 private:
  void problem(const std::string& where, const std::string& what) {
    diag_.ok = false;
    diag_.problems.push_back(where + ": " + what);
  }

  bool premises(const Derivation& d, const std::string& where, std::size_t n) {
    if (d.premises.size() != n) {
      problem(where, "expected " + std::to_string(n) + " premise(s), found " + std::to_string(d.premises.size()));
      return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (d.term.arity() <= i || d.premises[i].term != d.term.child(i)) {
        problem(where, "premise " + std::to_string(i) + " does not conclude the matching subterm");
      }
    }
    return true;
  }

  void same_context(const Derivation& d, const std::string& where) {
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
      if (d.premises[i].context != d.context) {
        problem(where, "premise " + std::to_string(i) + " does not share the conclusion's context");
      }
    }
  }

  void check_type(const std::string& where, const Proposition& got, const Proposition& want,
                  const std::string& what) {
    if (got != want) problem(where, what + ": " + got.to_string() + " vs " + want.to_string());
  }

  bool valid_split(const Derivation& d, const std::string& where) {
    if (!d.split) {
      problem(where, "multiplicative rule without a split plan");
      return false;
    }
    const auto& plan = *d.split;
    std::vector<std::size_t> sorted = plan.order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> want(d.context.size());
    std::iota(want.begin(), want.end(), 0);
    if (sorted != want || plan.first_size > plan.order.size()) {
      problem(where, "split plan is not a partition of the context");
      return false;
    }
    auto ordered = [](const std::vector<std::size_t>& v) { return std::is_sorted(v.begin(), v.end()); };
    if (!ordered(plan.first()) || !ordered(plan.second())) {
      problem(where, "split parts must keep the context order");
      return false;
    }
    return true;
  }

  bool kind_is(const Derivation& d, const std::string& where, TermKind k) {
    if (d.term.kind() != k) {
      problem(where, std::string("rule ") + to_string(d.rule) + " does not match term " + d.term.to_string());
      return false;
    }
    return true;
  }

  void visit(const Derivation& d, const std::string& where) {
    const std::string here = where + "/" + to_string(d.rule);
    const auto& ty = d.type;
    switch (d.rule) {
      case Rule::Ax:
        if (!kind_is(d, here, TermKind::Var) || !premises(d, here, 0)) break;
        if (d.context.size() != 1 || d.context[0].first != d.term.name()) {
          problem(here, "ax needs exactly the variable in context");
          break;
        }
        check_type(here, ty, d.context[0].second, "ax type");
        break;
      case Rule::Sum:
        if (!kind_is(d, here, TermKind::Sum) || !premises(d, here, 2)) break;
        same_context(d, here);
        check_type(here, d.premises[0].type, ty, "summand type");
        check_type(here, d.premises[1].type, ty, "summand type");
        break;
      case Rule::Scal:
        if (!kind_is(d, here, TermKind::Scal) || !premises(d, here, 1)) break;
        same_context(d, here);
        check_type(here, d.premises[0].type, ty, "scaled type");
        break;
      case Rule::OneI:
        if (!kind_is(d, here, TermKind::Star) || !premises(d, here, 0)) break;
        if (!d.context.empty()) problem(here, "1i needs the empty context");
        check_type(here, ty, Proposition::one(), "1i type");
        break;
      case Rule::TopI:
        if (!kind_is(d, here, TermKind::Unit) || !premises(d, here, 0)) break;
        check_type(here, ty, Proposition::top(), "top_i type");
        break;
      case Rule::OneE:
      case Rule::TensorI:
      case Rule::LollipopE: {
        TermKind k = d.rule == Rule::OneE ? TermKind::UnitElim
                     : d.rule == Rule::TensorI ? TermKind::Tens
                                               : TermKind::App;
        if (!kind_is(d, here, k) || !premises(d, here, 2) || !valid_split(d, here)) break;
        if (d.premises[0].context != d.context.select(d.split->first()) ||
            d.premises[1].context != d.context.select(d.split->second())) {
          problem(here, "premise contexts do not match the split");
        }
        const auto& a = d.premises[0].type;
        const auto& b = d.premises[1].type;
        if (d.rule == Rule::OneE) {
          check_type(here, a, Proposition::one(), "1e first premise");
          check_type(here, ty, b, "1e type");
        } else if (d.rule == Rule::TensorI) {
          check_type(here, ty, Proposition::tensor(a, b), "tensor_i type");
        } else {
          check_type(here, a, Proposition::lollipop(b, ty), "lollipop_e function type");
        }
        break;
      }
      case Rule::TensorE: {
        if (!kind_is(d, here, TermKind::LetTens) || !premises(d, here, 2) || !valid_split(d, here)) break;
        const auto& t = d.premises[0];
        if (t.context != d.context.select(d.split->second())) problem(here, "tensor_e scrutinee context");
        if (t.type.kind() != PropKind::Tensor) {
          problem(here, "tensor_e scrutinee is not a tensor");
          break;
        }
        Context want = d.context.select(d.split->first())
                           .extended(d.term.name(0), t.type.left())
                           .extended(d.term.name(1), t.type.right());
        if (d.premises[1].context != want) problem(here, "tensor_e continuation context");
        check_type(here, d.premises[1].type, ty, "tensor_e type");
        break;
      }
      case Rule::LollipopI: {
        if (!kind_is(d, here, TermKind::Lam) || !premises(d, here, 1)) break;
        const auto& body = d.premises[0];
        if (body.context.size() != d.context.size() + 1 ||
            body.context.select([&] {
              std::vector<std::size_t> v(d.context.size());
              std::iota(v.begin(), v.end(), 0);
              return v;
            }()) != d.context ||
            body.context[d.context.size()].first != d.term.name(0)) {
          problem(here, "lollipop_i body context must extend the conclusion's by the binder");
          break;
        }
        check_type(here, ty, Proposition::lollipop(body.context[d.context.size()].second, body.type),
                   "lollipop_i type");
        break;
      }
      case Rule::ZeroE:
        if (!kind_is(d, here, TermKind::ZeroElim) || !premises(d, here, 1) || !valid_split(d, here)) break;
        if (d.premises[0].context != d.context.select(d.split->first())) problem(here, "zero_e premise context");
        check_type(here, d.premises[0].type, Proposition::zero(), "zero_e premise");
        break;
      case Rule::WithI:
      case Rule::SupI: {
        bool with = d.rule == Rule::WithI;
        if (!kind_is(d, here, with ? TermKind::Pair : TermKind::SupPair) || !premises(d, here, 2)) break;
        same_context(d, here);
        auto want = with ? Proposition::with(d.premises[0].type, d.premises[1].type)
                         : Proposition::sup(d.premises[0].type, d.premises[1].type);
        check_type(here, ty, want, "introduction type");
        break;
      }
      case Rule::WithE1:
      case Rule::WithE2:
      case Rule::SupE1:
      case Rule::SupE2: {
        bool with = d.rule == Rule::WithE1 || d.rule == Rule::WithE2;
        bool first = d.rule == Rule::WithE1 || d.rule == Rule::SupE1;
        TermKind k = with ? (first ? TermKind::Fst : TermKind::Snd) : (first ? TermKind::SupFst : TermKind::SupSnd);
        if (!kind_is(d, here, k) || !premises(d, here, 1)) break;
        same_context(d, here);
        const auto& p = d.premises[0].type;
        if (p.kind() != (with ? PropKind::With : PropKind::Sup)) {
          problem(here, "projection from " + p.to_string());
          break;
        }
        check_type(here, ty, first ? p.left() : p.right(), "projection type");
        break;
      }
      case Rule::PlusI1:
      case Rule::PlusI2: {
        bool left = d.rule == Rule::PlusI1;
        if (!kind_is(d, here, left ? TermKind::Inl : TermKind::Inr) || !premises(d, here, 1)) break;
        same_context(d, here);
        if (ty.kind() != PropKind::Plus) {
          problem(here, "injection into " + ty.to_string());
          break;
        }
        check_type(here, d.premises[0].type, left ? ty.left() : ty.right(), "injected type");
        break;
      }
      case Rule::PlusE:
      case Rule::SupE: {
        bool plus = d.rule == Rule::PlusE;
        if (!kind_is(d, here, plus ? TermKind::Case : TermKind::SupElim) || !premises(d, here, 3) ||
            !valid_split(d, here)) {
          break;
        }
        const auto& s = d.premises[0];
        if (s.context != d.context.select(d.split->first())) problem(here, "eliminated premise context");
        if (s.type.kind() != (plus ? PropKind::Plus : PropKind::Sup)) {
          problem(here, "eliminating " + s.type.to_string());
          break;
        }
        Context shared = d.context.select(d.split->second());
        if (d.premises[1].context != shared.prepended(d.term.name(0), s.type.left()) ||
            d.premises[2].context != shared.prepended(d.term.name(1), s.type.right())) {
          problem(here, "branch contexts");
        }
        check_type(here, d.premises[1].type, ty, "left branch type");
        check_type(here, d.premises[2].type, ty, "right branch type");
        if (!plus && !(d.term.scalar(0) + d.term.scalar(1)).is_one()) problem(here, "weights do not sum to 1");
        break;
      }
    }
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
      visit(d.premises[i], here + "[" + std::to_string(i) + "]");
    }
  }

  Diagnosis diag_;
};

void collect_rules(const Derivation& d, std::vector<Rule>& out) {
  out.push_back(d.rule);
  for (const auto& p : d.premises) collect_rules(p, out);
}

}  // namespace

Diagnosis validate(const Derivation& d) { return Validator().run(d); }

std::vector<Rule> rules_used(const Derivation& d) {
  std::vector<Rule> out;
  collect_rules(d, out);
  return out;
}

SubjectReductionReport check_subject_reduction(const Term& t, const Context& ctx) {
  SubjectReductionReport report;
  Derivation d = typecheck(ctx, t);
  report.type = d.type;
  for (const auto& [step, reduct] : step_all(t)) {
    ++report.reducts_checked;
    try {
      Derivation r = typecheck(ctx, reduct, d.type);
      if (r.type != d.type) {
        report.violations.push_back(std::string(to_string(step.rule)) + " at " + to_string(step.position) +
                                    ": type changed to " + r.type.to_string());
      }
    } catch (const TypeError& e) {
      report.violations.push_back(std::string(to_string(step.rule)) + " at " + to_string(step.position) +
                                  ": " + e.what());
    }
  }
  return report;
}

}  // namespace supcalc
