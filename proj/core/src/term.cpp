#include "supcalc/term.hpp"

#include "supcalc/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace supcalc {

struct Term::Node {
  TermKind kind;
  std::vector<Term> children;
  std::vector<std::string> names;
  std::vector<Scalar> scalars;
  std::size_t size;
};

const char* keyword(TermKind kind) {
  switch (kind) {
    case TermKind::Var: return "<var>";
    case TermKind::Hole: return "[]";
    case TermKind::Sum: return "sum";
    case TermKind::Scal: return "scal";
    case TermKind::Star: return "star";
    case TermKind::UnitElim: return "unit_elim";
    case TermKind::Lam: return "lam";
    case TermKind::App: return "app";
    case TermKind::Tens: return "tens";
    case TermKind::LetTens: return "let_tens";
    case TermKind::Unit: return "unit";
    case TermKind::ZeroElim: return "zero_elim";
    case TermKind::Pair: return "pair";
    case TermKind::Fst: return "fst";
    case TermKind::Snd: return "snd";
    case TermKind::Inl: return "inl";
    case TermKind::Inr: return "inr";
    case TermKind::Case: return "case";
    case TermKind::SupPair: return "sup";
    case TermKind::SupFst: return "supfst";
    case TermKind::SupSnd: return "supsnd";
    case TermKind::SupElim: return "sup_elim";
  }
  return "?";
}

Term Term::make(TermKind kind, std::vector<Term> children, std::vector<std::string> names,
                std::vector<Scalar> scalars) {
  std::size_t size = 1;
  for (const auto& c : children) size += c.size();
  return Term(std::make_shared<const Node>(
      Node{kind, std::move(children), std::move(names), std::move(scalars), size}));
}

Term Term::var(std::string name) { return make(TermKind::Var, {}, {std::move(name)}, {}); }
Term Term::hole() { return make(TermKind::Hole, {}, {}, {}); }
Term Term::sum(Term t, Term u) { return make(TermKind::Sum, {std::move(t), std::move(u)}, {}, {}); }
Term Term::scal(Scalar s, Term t) { return make(TermKind::Scal, {std::move(t)}, {}, {std::move(s)}); }
Term Term::star(Scalar s) { return make(TermKind::Star, {}, {}, {std::move(s)}); }
Term Term::unit_elim(Term t, Term u) {
  return make(TermKind::UnitElim, {std::move(t), std::move(u)}, {}, {});
}
Term Term::lam(std::string x, Term body) {
  return make(TermKind::Lam, {std::move(body)}, {std::move(x)}, {});
}
Term Term::app(Term t, Term u) { return make(TermKind::App, {std::move(t), std::move(u)}, {}, {}); }
Term Term::tens(Term t, Term u) { return make(TermKind::Tens, {std::move(t), std::move(u)}, {}, {}); }
Term Term::let_tens(Term t, std::string x, std::string y, Term u) {
  return make(TermKind::LetTens, {std::move(t), std::move(u)}, {std::move(x), std::move(y)}, {});
}
Term Term::unit() {
  static const Term u = make(TermKind::Unit, {}, {}, {});
  return u;
}
Term Term::zero_elim(Term t) { return make(TermKind::ZeroElim, {std::move(t)}, {}, {}); }
Term Term::pair(Term t, Term u) { return make(TermKind::Pair, {std::move(t), std::move(u)}, {}, {}); }
Term Term::fst(Term t) { return make(TermKind::Fst, {std::move(t)}, {}, {}); }
Term Term::snd(Term t) { return make(TermKind::Snd, {std::move(t)}, {}, {}); }
Term Term::inl(Term t) { return make(TermKind::Inl, {std::move(t)}, {}, {}); }
Term Term::inr(Term t) { return make(TermKind::Inr, {std::move(t)}, {}, {}); }
Term Term::case_of(Term t, std::string x, Term u, std::string y, Term v) {
  return make(TermKind::Case, {std::move(t), std::move(u), std::move(v)}, {std::move(x), std::move(y)},
              {});
}
Term Term::sup(Term t, Term u) { return make(TermKind::SupPair, {std::move(t), std::move(u)}, {}, {}); }
Term Term::supfst(Term t) { return make(TermKind::SupFst, {std::move(t)}, {}, {}); }
Term Term::supsnd(Term t) { return make(TermKind::SupSnd, {std::move(t)}, {}, {}); }

Term Term::sup_elim(Scalar p, Scalar q, Term t, std::string x, Term u, std::string y, Term v) {
  if (p.value().index() != q.value().index() || !(p + q).is_one()) {
    throw WeightError("sup_elim weights " + p.to_string() + ", " + q.to_string() +
                      " do not sum to 1");
  }
  return make(TermKind::SupElim, {std::move(t), std::move(u), std::move(v)},
              {std::move(x), std::move(y)}, {std::move(p), std::move(q)});
}

Term Term::rebuild(const Term& like, std::vector<Term> children) {
  if (children.size() != like.arity()) throw std::logic_error("Term::rebuild arity mismatch");
  bool same = true;
  for (std::size_t i = 0; i < children.size() && same; ++i) same = children[i].same_node(like.child(i));
  if (same) return like;
  return make(like.kind(), std::move(children), like.names(), like.scalars());
}

Term Term::rename_binders(const Term& like, std::vector<std::string> names) {
  if (names.size() != like.names().size()) throw std::logic_error("Term::rename_binders size mismatch");
  return make(like.kind(), like.children(), std::move(names), like.scalars());
}

Term Term::with_scalars(const Term& like, std::vector<Scalar> scalars) {
  if (scalars.size() != like.scalars().size()) throw std::logic_error("Term::with_scalars size mismatch");
  if (like.kind() == TermKind::SupElim) {
    return sup_elim(scalars[0], scalars[1], like.child(0), like.name(0), like.child(1), like.name(1),
                    like.child(2));
  }
  return make(like.kind(), like.children(), like.names(), std::move(scalars));
}

TermKind Term::kind() const { return node_->kind; }
std::size_t Term::arity() const { return node_->children.size(); }
const Term& Term::child(std::size_t i) const { return node_->children.at(i); }
const std::vector<Term>& Term::children() const { return node_->children; }
const std::string& Term::name(std::size_t i) const { return node_->names.at(i); }
const std::vector<std::string>& Term::names() const { return node_->names; }
const Scalar& Term::scalar(std::size_t i) const { return node_->scalars.at(i); }
const std::vector<Scalar>& Term::scalars() const { return node_->scalars; }
std::size_t Term::size() const { return node_->size; }

bool Term::is_binder() const {
  switch (kind()) {
    case TermKind::Lam:
    case TermKind::LetTens:
    case TermKind::Case:
    case TermKind::SupElim: return true;
    default: return false;
  }
}

std::vector<std::size_t> Term::bound_in_child(std::size_t i) const {
  switch (kind()) {
    case TermKind::Lam: return {0};
    case TermKind::LetTens: return i == 1 ? std::vector<std::size_t>{0, 1} : std::vector<std::size_t>{};
    case TermKind::Case:
    case TermKind::SupElim:
      if (i == 1) return {0};
      if (i == 2) return {1};
      return {};
    default: return {};
  }
}

std::string Term::to_string() const {
  const auto& n = *node_;
  auto c = [&](std::size_t i) { return n.children[i].to_string(); };
  switch (n.kind) {
    case TermKind::Var: return n.names[0];
    case TermKind::Hole: return "[]";
    case TermKind::Unit: return "unit";
    case TermKind::Star: return "star(" + n.scalars[0].to_string() + ")";
    case TermKind::Scal: return "scal(" + n.scalars[0].to_string() + "," + c(0) + ")";
    case TermKind::Lam: return "lam(" + n.names[0] + ", " + c(0) + ")";
    case TermKind::LetTens:
      return "let_tens(" + c(0) + "," + n.names[0] + "," + n.names[1] + "," + c(1) + ")";
    case TermKind::Case:
      return "case(" + c(0) + "," + n.names[0] + "." + c(1) + "," + n.names[1] + "." + c(2) + ")";
    case TermKind::SupElim:
      return "sup_elim{" + n.scalars[0].to_string() + "," + n.scalars[1].to_string() + "}(" + c(0) +
             "," + n.names[0] + "." + c(1) + "," + n.names[1] + "." + c(2) + ")";
    default: {
      std::string out = keyword(n.kind);
      out += "(";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += ",";
        out += c(i);
      }
      return out + ")";
    }
  }
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.size != y.size || x.names != y.names || x.scalars != y.scalars) return false;
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (!(x.children[i] == y.children[i])) return false;
  }
  return true;
}

namespace {

void collect_free(const Term& t, std::set<std::string>& bound_stack_names,
                  std::multiset<std::string>& bound, std::set<std::string>& out) {
  if (t.kind() == TermKind::Var) {
    if (!bound.count(t.name())) out.insert(t.name());
    return;
  }
  for (std::size_t i = 0; i < t.arity(); ++i) {
    auto b = t.bound_in_child(i);
    for (auto k : b) bound.insert(t.name(k));
    collect_free(t.child(i), bound_stack_names, bound, out);
    for (auto k : b) bound.erase(bound.find(t.name(k)));
  }
}

std::size_t count_free_impl(const std::string& x, const Term& t) {
  if (t.kind() == TermKind::Var) return t.name() == x ? 1 : 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    bool shadowed = false;
    for (auto k : t.bound_in_child(i)) shadowed = shadowed || t.name(k) == x;
    if (!shadowed) n += count_free_impl(x, t.child(i));
  }
  return n;
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> unused;
  std::multiset<std::string> bound;
  std::set<std::string> out;
  collect_free(t, unused, bound, out);
  return out;
}

bool occurs_free(const std::string& x, const Term& t) { return count_free_impl(x, t) > 0; }
std::size_t count_free(const std::string& x, const Term& t) { return count_free_impl(x, t); }

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string candidate = base;
  while (avoid.count(candidate)) candidate += "'";
  return candidate;
}

Term substitute(const Term& target, const std::map<std::string, Term>& values) {
  if (values.empty()) return target;
  switch (target.kind()) {
    case TermKind::Var: {
      auto it = values.find(target.name());
      return it == values.end() ? target : it->second;
    }
    case TermKind::Hole:
    case TermKind::Unit:
    case TermKind::Star: return target;
    default: break;
  }

  std::vector<Term> children;
  children.reserve(target.arity());
  std::vector<std::string> names = target.names();
  bool renamed = false;

  for (std::size_t i = 0; i < target.arity(); ++i) {
    const Term& child = target.child(i);
    auto bound = target.bound_in_child(i);
    std::set<std::string> child_free = free_vars(child);

    std::map<std::string, Term> local;
    for (const auto& [key, value] : values) {
      bool is_bound = false;
      for (auto k : bound) is_bound = is_bound || target.name(k) == key;
      if (!is_bound && child_free.count(key)) local.emplace(key, value);
    }
    if (local.empty()) {
      children.push_back(child);
      continue;
    }

    std::set<std::string> value_free;
    for (const auto& [key, value] : local) {
      auto fv = free_vars(value);
      value_free.insert(fv.begin(), fv.end());
    }
    std::set<std::string> avoid = value_free;
    avoid.insert(child_free.begin(), child_free.end());
    for (const auto& [key, value] : local) avoid.insert(key);
    for (auto k : bound) avoid.insert(target.name(k));

    for (auto k : bound) {
      const std::string& old = target.name(k);
      if (!value_free.count(old)) continue;
      std::string fresh = fresh_name(old, avoid);
      avoid.insert(fresh);
      local.insert_or_assign(old, Term::var(fresh));
      names[k] = fresh;
      renamed = true;
    }
    children.push_back(substitute(child, local));
  }

  Term rebuilt = Term::rebuild(target, std::move(children));
  return renamed ? Term::rename_binders(rebuilt, std::move(names)) : rebuilt;
}

Term substitute(const Term& target, const std::string& x, const Term& value) {
  return substitute(target, std::map<std::string, Term>{{x, value}});
}

namespace {

using Env = std::vector<std::pair<std::string, std::string>>;

bool alpha_impl(const Term& a, const Term& b, Env& env) {
  if (a.kind() != b.kind() || a.arity() != b.arity()) return false;
  if (a.kind() == TermKind::Var) {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      bool left = it->first == a.name();
      bool right = it->second == b.name();
      if (left || right) return left && right;
    }
    return a.name() == b.name();
  }
  if (a.scalars() != b.scalars()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    auto bound = a.bound_in_child(i);
    for (auto k : bound) env.emplace_back(a.name(k), b.name(k));
    bool ok = alpha_impl(a.child(i), b.child(i), env);
    env.resize(env.size() - bound.size());
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool alpha_equal(const Term& a, const Term& b) {
  if (a.same_node(b)) return true;
  Env env;
  return alpha_impl(a, b, env);
}

Term freshen_binders(const Term& t, std::set<std::string> avoid) {
  if (t.arity() == 0) return t;
  std::vector<Term> children;
  std::vector<std::string> names = t.names();
  bool renamed = false;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    Term child = t.child(i);
    auto bound = t.bound_in_child(i);
    std::set<std::string> inner = avoid;
    if (!bound.empty()) {
      std::map<std::string, Term> renames;
      std::set<std::string> local_avoid = avoid;
      auto fv = free_vars(child);
      local_avoid.insert(fv.begin(), fv.end());
      for (auto k : bound) local_avoid.insert(t.name(k));
      for (auto k : bound) {
        const std::string& old = t.name(k);
        if (avoid.count(old)) {
          std::string fresh = fresh_name(old, local_avoid);
          local_avoid.insert(fresh);
          renames.insert_or_assign(old, Term::var(fresh));
          names[k] = fresh;
          renamed = true;
        }
        inner.insert(names[k]);
      }
      if (!renames.empty()) child = substitute(child, renames);
    }
    children.push_back(freshen_binders(child, inner));
  }
  Term rebuilt = Term::rebuild(t, std::move(children));
  return renamed ? Term::rename_binders(rebuilt, std::move(names)) : rebuilt;
}

std::string to_string(const Position& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

const Term& subterm_at(const Term& t, const Position& pos) {
  const Term* cur = &t;
  for (auto i : pos) cur = &cur->child(i);
  return *cur;
}

namespace {

Term replace_impl(const Term& t, const Position& pos, std::size_t depth, Term replacement) {
  if (depth == pos.size()) return replacement;
  std::vector<Term> children = t.children();
  children.at(pos[depth]) = replace_impl(t.child(pos[depth]), pos, depth + 1, std::move(replacement));
  return Term::rebuild(t, std::move(children));
}

}  // namespace

Term replace_at(const Term& t, const Position& pos, Term replacement) {
  return replace_impl(t, pos, 0, std::move(replacement));
}

std::size_t hole_count(const Term& t) {
  if (t.kind() == TermKind::Hole) return 1;
  std::size_t n = 0;
  for (const auto& c : t.children()) n += hole_count(c);
  return n;
}

TermContext::TermContext(Term body) : body_(std::move(body)) {
  if (auto n = hole_count(body_); n != 1) {
    throw Error("a term context needs exactly one hole, found " + std::to_string(n));
  }
}

namespace {

Term fill_impl(const Term& t, const Term& filler) {
  if (t.kind() == TermKind::Hole) return filler;
  if (t.arity() == 0) return t;
  std::vector<Term> children;
  children.reserve(t.arity());
  for (const auto& c : t.children()) children.push_back(fill_impl(c, filler));
  return Term::rebuild(t, std::move(children));
}

}  // namespace

Term TermContext::fill(const Term& t) const { return fill_impl(body_, t); }

TermContext TermContext::compose(const TermContext& inner) const {
  return TermContext(fill_impl(body_, inner.body_));
}

}  // namespace supcalc
