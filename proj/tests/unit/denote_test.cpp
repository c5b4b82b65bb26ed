#include "supcalc/corpus.hpp"
#include "supcalc/denote.hpp"
#include "supcalc/error.hpp"
#include "supcalc/generator.hpp"
#include "supcalc/parser.hpp"
#include "supcalc/rewrite.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace supcalc;
using namespace supcalc::model;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

}  // namespace

TEST(Denote, ObjectsOfPropositions) {
  EXPECT_EQ(denote_prop(parse_proposition("one")).dim, 1u);
  EXPECT_EQ(denote_prop(parse_proposition("top")).dim, 0u);
  EXPECT_EQ(denote_prop(parse_proposition("zero")).dim, 0u);
  EXPECT_EQ(denote_prop(parse_proposition("(one & one) (*) (one (+) one & one)")).dim, 6u);
  EXPECT_EQ(denote_prop(parse_proposition("(one & one) -o (one (o) one)")).dim, 4u);
  EXPECT_EQ(denote_ctx(Context()).dim, 1u);
  EXPECT_EQ(denote_ctx(parse_context("x:one & one, y:one & one & one")).dim, 6u);
}

TEST(Denote, SmallTerms) {
  EXPECT_EQ(denote_term(parse_term("star(2)")), Mat(1, 1, {q(2)}));
  EXPECT_EQ(denote_term(parse_term("lam(x, x)")), Mat(1, 1, {q(1)}));
  EXPECT_EQ(denote_term(parse_term("pair(star(2), scal(3, star(1)))")), Mat(2, 1, {q(2), q(3)}));
  EXPECT_EQ(denote_term(parse_term("unit")), Mat(0, 1));
  EXPECT_EQ(denote_term(parse_term("fst(x)"), parse_context("x:one & one")), Mat(1, 2, {q(1), q(0)}));
  EXPECT_EQ(denote_term(parse_term("sum(fst(x), snd(x))"), parse_context("x:one & one")), Mat(1, 2, {q(1), q(1)}));
  EXPECT_EQ(denote_term(parse_term("sup_elim{1/4,3/4}(sup(star(1), star(2)), a.a, b.b)")), Mat(1, 1, {q(7, 4)}));
  // identity at a wider type: the 2x2 identity as a vector of hom(2, 2)
  EXPECT_EQ(denote_term(parse_term("lam(x, x)"), Context(), parse_proposition("(one & one) -o (one & one)")),
            Mat(4, 1, {q(1), q(0), q(0), q(1)}));
}

TEST(Denote, ShapesFollowTheDerivation) {
  for (const auto& e : corpus()) {
    auto i = denote(typecheck(e.context, e.term, e.type));
    EXPECT_EQ(i.object_out, denote_prop(e.type)) << e.name;
    EXPECT_EQ(i.object_in, denote_ctx(e.context)) << e.name;
    EXPECT_EQ(i.matrix.rows(), i.object_out.dim) << e.name;
    EXPECT_EQ(i.matrix.cols(), i.object_in.dim) << e.name;
  }
}

TEST(Denote, ContextPermutationMovesBasisVectors) {
  Context g = parse_context("a:one & one, b:one, c:one & one & one");
  std::vector<std::size_t> dims{2, 1, 3};
  std::vector<std::size_t> order{0, 1, 2};
  do {
    Mat oracle(6, 6);
    for (std::size_t j = 0; j < 6; ++j) {
      std::size_t idx[3] = {j / 3, 0, j % 3};
      std::size_t i = 0;
      for (auto k : order) i = i * dims[k] + idx[k];
      oracle.set(i, j, q(1));
    }
    EXPECT_EQ(context_permutation(g, order), oracle);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(Denote, SubstitutionIsComposition) {
  auto td = typecheck(parse_context("x:one & one, y:one"), parse_term("unit_elim(y, sum(fst(x), snd(x)))"));
  auto vd = typecheck(parse_context("z:one"), parse_term("unit_elim(z, pair(star(2), star(3)))"));
  EXPECT_TRUE(check_substitution(td, "x", vd));
  auto vy = typecheck(parse_term("star(5)"));
  EXPECT_TRUE(check_substitution(td, "y", vy));
}

TEST(DenoteProperty, SubstitutionIsCompositionOnGeneratedBodies) {
  GeneratorOptions o;
  o.sup_free = true;
  TermGenerator gen(21, o);
  std::size_t checked = 0;
  for (int i = 0; i < 200 && checked < 40; ++i) {
    auto a = gen.random_type(1);
    auto b = gen.random_type(1);
    Term f = normalize(gen.closed_term(Proposition::lollipop(a, b)));
    if (f.kind() != TermKind::Lam) continue;
    Term v = gen.closed_term(a);
    auto td = typecheck(Context({{f.name(), a}}), f.child(0), b);
    auto vd = typecheck(Context(), v, a);
    EXPECT_TRUE(check_substitution(td, f.name(), vd)) << f.to_string() << " with " << v.to_string();
    ++checked;
  }
  EXPECT_GE(checked, 40u);
}

TEST(Denote, SoundnessOnCorpus) {
  for (const auto& e : corpus()) {
    auto r = check_step_soundness(e.term, e.context);
    EXPECT_TRUE(r.ok()) << e.name << ": " << (r.violations.empty() ? "" : r.violations.front());
    EXPECT_TRUE(check_global_soundness(e.term, e.context)) << e.name;
  }
}

TEST(Denote, StepSoundnessReportsBothSupBranches) {
  auto r = check_step_soundness(parse_term("sup_elim{1/2,1/2}(sup(star(1), star(3)), a.a, b.b)"));
  EXPECT_EQ(r.redexes_checked, 1u);
  EXPECT_EQ(r.rules, (std::vector<RewriteRule>{RewriteRule::SupElimLeft, RewriteRule::SupElimRight}));
  EXPECT_TRUE(r.ok());
}

TEST(Denote, AdequacyVerdicts) {
  auto t = corpus_entry("adequacy_t")->term;
  auto u = corpus_entry("adequacy_u")->term;
  EXPECT_EQ(adequacy_compare(t, u).verdict, Verdict::Consistent);
  auto eta = adequacy_compare(corpus_entry("eta_expanded")->term, corpus_entry("eta_identity")->term);
  EXPECT_EQ(eta.verdict, Verdict::Consistent);
  EXPECT_EQ(eta.left, eta.right);
  EXPECT_EQ(adequacy_compare(parse_term("star(1)"), parse_term("star(2)")).verdict, Verdict::DistinctDenotations);
  EXPECT_EQ(adequacy_compare(parse_term("inl(star(1))"), parse_term("inl(fst(pair(star(1), star(2))))")).verdict,
            Verdict::Undecided);
  EXPECT_EQ(adequacy_compare(parse_term("unit"), parse_term("scal(2, unit)")).verdict, Verdict::Consistent);
  EXPECT_THROW(adequacy_compare(parse_term("star(1)"), parse_term("unit")), TypeError);
  EXPECT_STREQ(to_string(Verdict::Inconsistent), "inconsistent");
}
