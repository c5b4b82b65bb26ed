#include "supcalc/rewrite.hpp"

#include "supcalc/error.hpp"

#include <algorithm>

namespace supcalc {

const char* to_string(RewriteRule rule) {
  switch (rule) {
    case RewriteRule::UnitElim: return "unit_elim";
    case RewriteRule::TensElim: return "tens_elim";
    case RewriteRule::Beta: return "beta";
    case RewriteRule::Proj1: return "proj1";
    case RewriteRule::Proj2: return "proj2";
    case RewriteRule::CaseInl: return "case_inl";
    case RewriteRule::CaseInr: return "case_inr";
    case RewriteRule::SupProj1: return "sup_proj1";
    case RewriteRule::SupProj2: return "sup_proj2";
    case RewriteRule::SupElimLeft: return "sup_elim_left";
    case RewriteRule::SupElimRight: return "sup_elim_right";
    case RewriteRule::SumOne: return "sum_one";
    case RewriteRule::SumTens: return "sum_tens";
    case RewriteRule::SumLam: return "sum_lam";
    case RewriteRule::SumTop: return "sum_top";
    case RewriteRule::SumWith: return "sum_with";
    case RewriteRule::SumPlus: return "sum_plus";
    case RewriteRule::SumSup: return "sum_sup";
    case RewriteRule::ScalOne: return "scal_one";
    case RewriteRule::ScalTens: return "scal_tens";
    case RewriteRule::ScalLam: return "scal_lam";
    case RewriteRule::ScalTop: return "scal_top";
    case RewriteRule::ScalWith: return "scal_with";
    case RewriteRule::ScalPlus: return "scal_plus";
    case RewriteRule::ScalSup: return "scal_sup";
  }
  return "?";
}

std::vector<RewriteRule> all_rewrite_rules() {
  std::vector<RewriteRule> out;
  for (std::size_t i = 0; i < kRewriteRuleCount; ++i) out.push_back(static_cast<RewriteRule>(i));
  return out;
}

namespace {

using Contracta = std::vector<std::pair<Step, Term>>;

void add(Contracta& out, RewriteRule rule, const Scalar& w, Term r) {
  out.push_back({Step{{}, rule, w}, std::move(r)});
}

// sum(lam(x,t), lam(y,u)) -> lam(z, sum(t[z/x], u[z/y])) with z fresh for both.
Term merge_lambdas(const Term& a, const Term& b) {
  const std::string& x = a.name(0);
  const std::string& y = b.name(0);
  auto fa = free_vars(a);
  auto fb = free_vars(b);
  std::string z = x;
  if (fb.count(z)) {
    std::set<std::string> avoid = fa;
    avoid.insert(fb.begin(), fb.end());
    avoid.insert(x);
    avoid.insert(y);
    z = fresh_name(x, avoid);
  }
  Term t = z == x ? a.child(0) : substitute(a.child(0), x, Term::var(z));
  Term u = z == y ? b.child(0) : substitute(b.child(0), y, Term::var(z));
  return Term::lam(z, Term::sum(t, u));
}

// Elimination forms that commute with a sum or scalar product in their scrutinee.
Term reuse_with(const Term& elim, Term scrutinee) {
  auto children = elim.children();
  children[0] = std::move(scrutinee);
  return Term::rebuild(elim, std::move(children));
}

}  // namespace

std::vector<std::pair<Step, Term>> contract_root(const Term& t, const Semiring& s) {
  Contracta out;
  const Scalar one = s.one();
  auto kind0 = [&](TermKind k) { return t.arity() > 0 && t.child(0).kind() == k; };
  switch (t.kind()) {
    case TermKind::UnitElim:
      if (kind0(TermKind::Star)) add(out, RewriteRule::UnitElim, one, Term::scal(t.child(0).scalar(), t.child(1)));
      break;
    case TermKind::LetTens: {
      const Term& m = t.child(0);
      if (m.kind() == TermKind::Tens) {
        add(out, RewriteRule::TensElim, one,
            substitute(t.child(1), std::map<std::string, Term>{{t.name(0), m.child(0)}, {t.name(1), m.child(1)}}));
      } else if (m.kind() == TermKind::Sum) {
        add(out, RewriteRule::SumTens, one, Term::sum(reuse_with(t, m.child(0)), reuse_with(t, m.child(1))));
      } else if (m.kind() == TermKind::Scal) {
        add(out, RewriteRule::ScalTens, one, Term::scal(m.scalar(), reuse_with(t, m.child(0))));
      }
      break;
    }
    case TermKind::App:
      if (kind0(TermKind::Lam)) {
        add(out, RewriteRule::Beta, one, substitute(t.child(0).child(0), t.child(0).name(), t.child(1)));
      }
      break;
    case TermKind::Fst:
      if (kind0(TermKind::Pair)) add(out, RewriteRule::Proj1, one, t.child(0).child(0));
      break;
    case TermKind::Snd:
      if (kind0(TermKind::Pair)) add(out, RewriteRule::Proj2, one, t.child(0).child(1));
      break;
    case TermKind::SupFst:
      if (kind0(TermKind::SupPair)) add(out, RewriteRule::SupProj1, one, t.child(0).child(0));
      break;
    case TermKind::SupSnd:
      if (kind0(TermKind::SupPair)) add(out, RewriteRule::SupProj2, one, t.child(0).child(1));
      break;
    case TermKind::Case: {
      const Term& m = t.child(0);
      if (m.kind() == TermKind::Inl) {
        add(out, RewriteRule::CaseInl, one, substitute(t.child(1), t.name(0), m.child(0)));
      } else if (m.kind() == TermKind::Inr) {
        add(out, RewriteRule::CaseInr, one, substitute(t.child(2), t.name(1), m.child(0)));
      } else if (m.kind() == TermKind::Sum) {
        add(out, RewriteRule::SumPlus, one, Term::sum(reuse_with(t, m.child(0)), reuse_with(t, m.child(1))));
      } else if (m.kind() == TermKind::Scal) {
        add(out, RewriteRule::ScalPlus, one, Term::scal(m.scalar(), reuse_with(t, m.child(0))));
      }
      break;
    }
    case TermKind::SupElim:
      if (kind0(TermKind::SupPair)) {
        const Term& m = t.child(0);
        add(out, RewriteRule::SupElimLeft, t.scalar(0), substitute(t.child(1), t.name(0), m.child(0)));
        add(out, RewriteRule::SupElimRight, t.scalar(1), substitute(t.child(2), t.name(1), m.child(1)));
      }
      break;
    case TermKind::Sum: {
      const Term& a = t.child(0);
      const Term& b = t.child(1);
      if (a.kind() != b.kind()) break;
      switch (a.kind()) {
        case TermKind::Star: add(out, RewriteRule::SumOne, one, Term::star(a.scalar() + b.scalar())); break;
        case TermKind::Lam: add(out, RewriteRule::SumLam, one, merge_lambdas(a, b)); break;
        case TermKind::Unit: add(out, RewriteRule::SumTop, one, Term::unit()); break;
        case TermKind::Pair:
          add(out, RewriteRule::SumWith, one,
              Term::pair(Term::sum(a.child(0), b.child(0)), Term::sum(a.child(1), b.child(1))));
          break;
        case TermKind::SupPair:
          add(out, RewriteRule::SumSup, one,
              Term::sup(Term::sum(a.child(0), b.child(0)), Term::sum(a.child(1), b.child(1))));
          break;
        default: break;
      }
      break;
    }
    case TermKind::Scal: {
      const Scalar& k = t.scalar();
      const Term& a = t.child(0);
      switch (a.kind()) {
        case TermKind::Star: add(out, RewriteRule::ScalOne, one, Term::star(k * a.scalar())); break;
        case TermKind::Lam:
          add(out, RewriteRule::ScalLam, one, Term::lam(a.name(), Term::scal(k, a.child(0))));
          break;
        case TermKind::Unit: add(out, RewriteRule::ScalTop, one, Term::unit()); break;
        case TermKind::Pair:
          add(out, RewriteRule::ScalWith, one, Term::pair(Term::scal(k, a.child(0)), Term::scal(k, a.child(1))));
          break;
        case TermKind::SupPair:
          add(out, RewriteRule::ScalSup, one, Term::sup(Term::scal(k, a.child(0)), Term::scal(k, a.child(1))));
          break;
        default: break;
      }
      break;
    }
    default: break;
  }
  return out;
}

namespace {

void collect_steps(const Term& root, const Term& t, Position& pos, const Semiring& s, Contracta& out) {
  for (auto& [step, r] : contract_root(t, s)) {
    step.position = pos;
    out.push_back({std::move(step), replace_at(root, pos, std::move(r))});
  }
  for (std::size_t i = 0; i < t.arity(); ++i) {
    pos.push_back(i);
    collect_steps(root, t.child(i), pos, s, out);
    pos.pop_back();
  }
}

bool has_root_redex(const Term& t) {
  switch (t.kind()) {
    case TermKind::UnitElim: return t.child(0).kind() == TermKind::Star;
    case TermKind::LetTens: {
      auto k = t.child(0).kind();
      return k == TermKind::Tens || k == TermKind::Sum || k == TermKind::Scal;
    }
    case TermKind::App: return t.child(0).kind() == TermKind::Lam;
    case TermKind::Fst:
    case TermKind::Snd: return t.child(0).kind() == TermKind::Pair;
    case TermKind::SupFst:
    case TermKind::SupSnd:
    case TermKind::SupElim: return t.child(0).kind() == TermKind::SupPair;
    case TermKind::Case: {
      auto k = t.child(0).kind();
      return k == TermKind::Inl || k == TermKind::Inr || k == TermKind::Sum || k == TermKind::Scal;
    }
    case TermKind::Sum: {
      auto a = t.child(0).kind();
      if (a != t.child(1).kind()) return false;
      return a == TermKind::Star || a == TermKind::Lam || a == TermKind::Unit || a == TermKind::Pair ||
             a == TermKind::SupPair;
    }
    case TermKind::Scal: {
      auto a = t.child(0).kind();
      return a == TermKind::Star || a == TermKind::Lam || a == TermKind::Unit || a == TermKind::Pair ||
             a == TermKind::SupPair;
    }
    default: return false;
  }
}

// Position of the redex the deterministic strategy picks, if any.
bool find_redex(const Term& t, Strategy strategy, Position& pos) {
  bool outer = strategy == Strategy::LeftmostOutermost || strategy == Strategy::RightmostOutermost;
  bool left = strategy == Strategy::LeftmostOutermost || strategy == Strategy::LeftmostInnermost;
  if (outer && has_root_redex(t)) return true;
  std::size_t n = t.arity();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = left ? k : n - 1 - k;
    pos.push_back(i);
    if (find_redex(t.child(i), strategy, pos)) return true;
    pos.pop_back();
  }
  return !outer && has_root_redex(t);
}

}  // namespace

std::vector<std::pair<Step, Term>> step_all(const Term& t, const Semiring& s) {
  Contracta out;
  Position pos;
  collect_steps(t, t, pos, s, out);
  return out;
}

bool is_normal(const Term& t) {
  if (has_root_redex(t)) return false;
  for (const auto& c : t.children()) {
    if (!is_normal(c)) return false;
  }
  return true;
}

std::vector<std::pair<Step, Term>> next_steps(const Term& t, const ReduceOptions& opts, const Semiring& s,
                                              std::mt19937_64* rng) {
  if (opts.strategy == Strategy::Random) {
    auto all = step_all(t, s);
    if (all.empty()) return {};
    std::mt19937_64 local(opts.seed);
    std::mt19937_64& gen = rng ? *rng : local;
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(gen);
    // Keep both sup branches together.
    if (all[pick].first.rule == RewriteRule::SupElimRight) --pick;
    if (all[pick].first.rule == RewriteRule::SupElimLeft) return {all[pick], all[pick + 1]};
    return {all[pick]};
  }
  Position pos;
  if (!find_redex(t, opts.strategy, pos)) return {};
  Contracta out;
  for (auto& [step, r] : contract_root(subterm_at(t, pos), s)) {
    step.position = pos;
    out.push_back({std::move(step), replace_at(t, pos, std::move(r))});
  }
  return out;
}

Term normalize(const Term& t, const ReduceOptions& opts, const Semiring& s) {
  std::mt19937_64 rng(opts.seed);
  Term cur = t;
  for (std::size_t n = 0;; ++n) {
    auto next = next_steps(cur, opts, s, &rng);
    if (next.empty()) return cur;
    if (is_sup_branch(next.front().first.rule)) {
      throw SupBranchEncountered("sup_elim redex at " + to_string(next.front().first.position) +
                                 "; use the distribution instead");
    }
    if (n >= opts.budget) {
      throw ReductionBudgetExceeded("no normal form within " + std::to_string(opts.budget) + " steps");
    }
    cur = std::move(next.front().second);
  }
}

namespace {

struct Pending {
  Scalar weight;
  Term term;
  std::size_t depth;
  std::vector<std::pair<Step, Term>> trail;
};

template <typename Leaf>
void explore(const Term& t, const Semiring& s, const ReduceOptions& opts, bool record, Leaf&& leaf) {
  if (opts.strategy != Strategy::LeftmostOutermost && opts.strategy != Strategy::RightmostOutermost) {
    throw Error("distributions need an outermost strategy");
  }
  std::vector<Pending> stack;
  stack.push_back({s.one(), t, 0, {}});
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    auto next = next_steps(cur.term, opts, s);
    if (next.empty()) {
      leaf(std::move(cur));
      continue;
    }
    if (cur.depth >= opts.budget) {
      throw ReductionBudgetExceeded("no normal form within " + std::to_string(opts.budget) + " steps");
    }
    // Push in reverse so the left branch is explored first.
    for (auto it = next.rbegin(); it != next.rend(); ++it) {
      Pending child{cur.weight * it->first.weight, it->second, cur.depth + 1, {}};
      if (record) {
        child.trail = cur.trail;
        child.trail.push_back(*it);
      }
      stack.push_back(std::move(child));
    }
  }
}

}  // namespace

Distribution distribution(const Term& t, const Semiring& s, const ReduceOptions& opts) {
  Distribution out;
  explore(t, s, opts, false, [&](Pending&& p) { out.push_back({std::move(p.weight), std::move(p.term)}); });
  return out;
}

std::vector<Path> paths(const Term& t, const Semiring& s, const ReduceOptions& opts) {
  std::vector<Path> out;
  explore(t, s, opts, true, [&](Pending&& p) { out.push_back({std::move(p.trail), std::move(p.weight), t}); });
  return out;
}

Distribution aggregate(const Distribution& d, const Semiring& s) {
  Distribution out;
  for (const auto& o : d) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Outcome& e) { return alpha_equal(e.value, o.value); });
    if (it == out.end()) {
      out.push_back(o);
    } else {
      it->weight = s.add(it->weight, o.weight);
    }
  }
  return out;
}

Scalar total_mass(const Distribution& d, const Semiring& s) {
  Scalar sum = s.zero();
  for (const auto& o : d) sum = s.add(sum, o.weight);
  return sum;
}

Term sum_of_distribution(const Distribution& d) {
  if (d.empty()) throw EmptyDistribution("sum of an empty distribution");
  std::vector<std::pair<std::string, Term>> elems;
  for (const auto& o : d) {
    Term e = Term::scal(o.weight, o.value);
    elems.emplace_back(e.to_string(), e);
  }
  std::stable_sort(elems.begin(), elems.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Term acc = elems.front().second;
  for (std::size_t i = 1; i < elems.size(); ++i) acc = Term::sum(acc, elems[i].second);
  return acc;
}

bool matches_introduction_shape(const Term& t, const Proposition& type) {
  auto k = t.kind();
  switch (type.kind()) {
    case PropKind::One: return k == TermKind::Star;
    case PropKind::Top: return k == TermKind::Unit;
    case PropKind::Zero: return false;
    case PropKind::With: return k == TermKind::Pair;
    case PropKind::Sup: return k == TermKind::SupPair;
    case PropKind::Lollipop: return k == TermKind::Lam;
    case PropKind::Tensor: return k == TermKind::Tens || k == TermKind::Sum || k == TermKind::Scal;
    case PropKind::Plus:
      return k == TermKind::Inl || k == TermKind::Inr || k == TermKind::Sum || k == TermKind::Scal;
  }
  return false;
}

}  // namespace supcalc
