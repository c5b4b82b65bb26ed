#include "supcalc/denote.hpp"

#include "supcalc/error.hpp"
#include "supcalc/observe.hpp"
#include "supcalc/veccodec.hpp"

#include <algorithm>
#include <numeric>

namespace supcalc {

using namespace model;

namespace {

std::size_t product(const std::vector<std::size_t>& dims, std::size_t from, std::size_t to) {
  std::size_t p = 1;
  for (std::size_t i = from; i < to; ++i) p *= dims[i];
  return p;
}

Obj part_obj(const Context& g, const std::vector<std::size_t>& idx) { return denote_ctx(g.select(idx)); }

class Interpreter {
 public:
  explicit Interpreter(const Semiring& s) : s_(s) {}

  Mat run(const Derivation& d) {
    const Context& g = d.context;
    Obj gam = denote_ctx(g);
    Obj out = denote_prop(d.type);
    switch (d.rule) {
      case Rule::Ax: return identity(out, s_);
      case Rule::OneI: return embed(d.term.scalar(), s_);
      case Rule::Sum: return add(run(d.premises[0]), run(d.premises[1]));
      case Rule::Scal: return compose(scalar_map(d.term.scalar(), out, s_), run(d.premises[0]));
      case Rule::TopI: return zero_mat(gam, zero_obj(), s_);
      case Rule::OneE:
      case Rule::TensorI:
      case Rule::LollipopE: {
        Mat p = context_permutation(g, d.split->order, s_);
        Mat both = compose(tensor_mat(run(d.premises[0]), run(d.premises[1])), p);
        if (d.rule == Rule::LollipopE) {
          return compose(eval_map(denote_prop(d.premises[1].type), out, s_), both);
        }
        if (d.rule == Rule::OneE) return compose(coherence(Coherence::LambdaU, {out}, s_), both);
        return both;
      }
      case Rule::TensorE: {
        Mat p = context_permutation(g, d.split->order, s_);
        Obj residual = part_obj(g, d.split->first());
        Mat scrutinee = run(d.premises[0]);
        return compose(run(d.premises[1]), compose(tensor_mat(identity(residual, s_), scrutinee), p));
      }
      case Rule::LollipopI: {
        const Derivation& body = d.premises[0];
        Obj a = denote_prop(body.context[body.context.size() - 1].second);
        return compose(hom_map(a, run(body)), unit_map(gam, a, s_));
      }
      case Rule::ZeroE: {
        Mat p = context_permutation(g, d.split->order, s_);
        Obj absorbed = part_obj(g, d.split->second());
        Mat through = tensor_mat(run(d.premises[0]), identity(absorbed, s_));
        return compose(zero_mat(Obj{through.rows()}, out, s_), compose(through, p));
      }
      case Rule::WithI:
      case Rule::SupI: {
        Mat l = run(d.premises[0]), r = run(d.premises[1]);
        return compose(biproduct_mat(l, r), diag(gam, s_));
      }
      case Rule::WithE1:
      case Rule::WithE2:
      case Rule::SupE1:
      case Rule::SupE2: {
        const Proposition& ab = d.premises[0].type;
        Obj a = denote_prop(ab.left()), b = denote_prop(ab.right());
        bool first = d.rule == Rule::WithE1 || d.rule == Rule::SupE1;
        return compose(first ? proj1(a, b, s_) : proj2(a, b, s_), run(d.premises[0]));
      }
      case Rule::PlusI1:
      case Rule::PlusI2: {
        Obj a = denote_prop(d.type.left()), b = denote_prop(d.type.right());
        return compose(d.rule == Rule::PlusI1 ? inj1(a, b, s_) : inj2(a, b, s_), run(d.premises[0]));
      }
      case Rule::PlusE:
      case Rule::SupE: {
        Mat p = context_permutation(g, d.split->order, s_);
        Obj shared = part_obj(g, d.split->second());
        const Proposition& ab = d.premises[0].type;
        Obj a = denote_prop(ab.left()), b = denote_prop(ab.right());
        Mat into = compose(distribute(Distributor::D, a, b, shared, s_),
                           compose(tensor_mat(run(d.premises[0]), identity(shared, s_)), p));
        Mat u = run(d.premises[1]), v = run(d.premises[2]);
        if (d.rule == Rule::PlusE) return compose(copair(u, v), into);
        Mat merge = weighted_codiag(d.term.scalar(0), d.term.scalar(1), out, s_);
        return compose(merge, compose(biproduct_mat(u, v), into));
      }
    }
    throw Error("unknown rule");
  }

 private:
  const Semiring& s_;
};

bool same_matrix(const Mat& a, const Mat& b) { return a == b; }

}  // namespace

Obj denote_prop(const Proposition& a) {
  switch (a.kind()) {
    case PropKind::One: return unit_obj();
    case PropKind::Top:
    case PropKind::Zero: return zero_obj();
    case PropKind::Tensor: return tensor_obj(denote_prop(a.left()), denote_prop(a.right()));
    case PropKind::Lollipop: return hom_obj(denote_prop(a.left()), denote_prop(a.right()));
    case PropKind::With:
    case PropKind::Plus:
    case PropKind::Sup: return biproduct_obj(denote_prop(a.left()), denote_prop(a.right()));
  }
  throw Error("unknown proposition");
}

Obj denote_ctx(const Context& g) {
  Obj o = unit_obj();
  for (const auto& [name, type] : g) o = tensor_obj(o, denote_prop(type));
  return o;
}

Mat context_permutation(const Context& g, const std::vector<std::size_t>& order, const Semiring& s) {
  std::vector<std::size_t> cur(g.size());
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<std::size_t> dims;
  for (const auto& [name, type] : g) dims.push_back(denote_prop(type).dim);
  auto dims_now = [&] {
    std::vector<std::size_t> v;
    for (auto i : cur) v.push_back(dims[i]);
    return v;
  };
  Mat p = identity(denote_ctx(g), s);
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto it = std::find(cur.begin() + static_cast<std::ptrdiff_t>(k), cur.end(), order[k]);
    if (it == cur.end()) throw Error("context order is not a permutation");
    for (auto j = static_cast<std::size_t>(it - cur.begin()); j > k; --j) {
      auto dn = dims_now();
      Mat swap = tensor_mat(tensor_mat(identity(Obj{product(dn, 0, j - 1)}, s), sigma(Obj{dn[j - 1]}, Obj{dn[j]}, s)),
                            identity(Obj{product(dn, j + 1, dn.size())}, s));
      p = compose(swap, p);
      std::swap(cur[j - 1], cur[j]);
    }
  }
  return p;
}

Interp denote(const Derivation& d, const Semiring& s) {
  Mat m = Interpreter(s).run(d);
  return Interp{d, denote_ctx(d.context), denote_prop(d.type), std::move(m)};
}

Mat denote_term(const Term& t, const Context& ctx, const std::optional<Proposition>& expected, const Semiring& s) {
  return denote(typecheck(ctx, t, expected), s).matrix;
}

bool check_substitution(const Derivation& td, const std::string& x, const Derivation& vd, const Semiring& s) {
  const Context& g = td.context;
  auto at = g.index_of(x);
  if (!at) throw Error("'" + x + "' is not in the context of the substituted derivation");
  std::vector<Context::Binding> merged;
  for (std::size_t i = 0; i < *at; ++i) merged.push_back(g[i]);
  for (const auto& b : vd.context) merged.push_back(b);
  for (std::size_t i = *at + 1; i < g.size(); ++i) merged.push_back(g[i]);
  Context ctx(std::move(merged));

  std::vector<std::size_t> before(*at), after(g.size() - *at - 1);
  std::iota(before.begin(), before.end(), 0);
  std::iota(after.begin(), after.end(), *at + 1);
  Mat plug = tensor_mat(tensor_mat(identity(part_obj(g, before), s), denote(vd, s).matrix),
                        identity(part_obj(g, after), s));
  Mat rhs = compose(denote(td, s).matrix, plug);

  Derivation sub = typecheck(ctx, substitute(td.term, x, vd.term), td.type);
  return same_matrix(denote(sub, s).matrix, rhs);
}

StepSoundnessReport check_step_soundness(const Term& t, const Context& ctx, const Semiring& s) {
  StepSoundnessReport report;
  Derivation d = typecheck(ctx, t);
  Mat here = denote(d, s).matrix;
  auto steps = step_all(t, s);
  auto reduct_matrix = [&](const Term& r) { return denote(typecheck(ctx, r, d.type), s).matrix; };
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& [step, reduct] = steps[i];
    std::string where = std::string(to_string(step.rule)) + " at " + to_string(step.position);
    try {
      if (!is_sup_branch(step.rule)) {
        ++report.redexes_checked;
        report.rules.push_back(step.rule);
        if (!same_matrix(here, reduct_matrix(reduct))) report.violations.push_back(where + ": matrix changed");
        continue;
      }
      if (i + 1 >= steps.size() || steps[i + 1].first.position != step.position) {
        report.violations.push_back(where + ": sup-elimination redex without its second branch");
        continue;
      }
      const auto& [other, reduct2] = steps[i + 1];
      ++i;
      ++report.redexes_checked;
      report.rules.push_back(step.rule);
      report.rules.push_back(other.rule);
      Mat r1 = reduct_matrix(reduct), r2 = reduct_matrix(reduct2);
      Mat merged = compose(weighted_codiag(step.weight, other.weight, denote_prop(d.type), s),
                           compose(biproduct_mat(r1, r2), diag(denote_ctx(ctx), s)));
      if (!same_matrix(here, merged)) report.violations.push_back(where + ": weighted branches differ");
    } catch (const TypeError& e) {
      report.violations.push_back(where + ": reduct does not type: " + e.what());
    }
  }
  return report;
}

bool check_global_soundness(const Term& t, const Context& ctx, const Semiring& s) {
  Derivation d = typecheck(ctx, t);
  Term total = sum_of_distribution(distribution(t, s));
  return same_matrix(denote(d, s).matrix, denote_term(total, ctx, d.type, s));
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Undecided: return "equal denotations, observation undecided";
    case Verdict::DistinctDenotations: return "distinct denotations";
    case Verdict::Inconsistent: return "inconsistent";
  }
  return "?";
}

AdequacyResult adequacy_compare(const Term& t, const Term& u, const Semiring& s) {
  Derivation dt = typecheck(Context(), t);
  Derivation du = typecheck(Context(), u, dt.type);
  AdequacyResult r{Verdict::DistinctDenotations, dt.type, denote(dt, s).matrix, denote(du, s).matrix};
  if (!same_matrix(r.left, r.right)) return r;
  const Proposition& a = dt.type;
  bool observed;
  if (a.kind() == PropKind::Top || is_v(a)) {
    observed = mixed_equiv(t, u, a, s);
  } else if (a.kind() == PropKind::Lollipop && is_v(a.left()) && is_v(a.right())) {
    observed = extract_linear_map(t, a.left(), a.right(), s) == extract_linear_map(u, a.left(), a.right(), s);
  } else {
    r.verdict = Verdict::Undecided;
    return r;
  }
  r.verdict = observed ? Verdict::Consistent : Verdict::Inconsistent;
  return r;
}

}  // namespace supcalc
