#include "supcalc/corpus.hpp"
#include "supcalc/error.hpp"
#include "supcalc/parser.hpp"
#include "supcalc/rewrite.hpp"

#include <gtest/gtest.h>

using namespace supcalc;

namespace {

struct RuleCase {
  RewriteRule rule;
  const char* redex;
  const char* contractum;
};

const RuleCase kRuleCases[] = {
    {RewriteRule::UnitElim, "unit_elim(star(2), star(3))", "scal(2, star(3))"},
    {RewriteRule::TensElim, "let_tens(tens(star(2), unit), a, b, tens(b, a))", "tens(unit, star(2))"},
    {RewriteRule::Beta, "app(lam(x, scal(2, x)), star(3))", "scal(2, star(3))"},
    {RewriteRule::Proj1, "fst(pair(star(1), star(2)))", "star(1)"},
    {RewriteRule::Proj2, "snd(pair(star(1), star(2)))", "star(2)"},
    {RewriteRule::CaseInl, "case(inl(star(2)), x.scal(3, x), y.y)", "scal(3, star(2))"},
    {RewriteRule::CaseInr, "case(inr(star(2)), x.scal(3, x), y.y)", "star(2)"},
    {RewriteRule::SupProj1, "supfst(sup(star(1), unit))", "star(1)"},
    {RewriteRule::SupProj2, "supsnd(sup(star(1), unit))", "unit"},
    {RewriteRule::SumOne, "sum(star(1/2), star(3))", "star(7/2)"},
    {RewriteRule::SumTens, "let_tens(sum(p, q), a, b, unit_elim(a, b))",
     "sum(let_tens(p, a, b, unit_elim(a, b)), let_tens(q, a, b, unit_elim(a, b)))"},
    {RewriteRule::SumLam, "sum(lam(x, x), lam(y, scal(2, y)))", "lam(z, sum(z, scal(2, z)))"},
    {RewriteRule::SumTop, "sum(unit, unit)", "unit"},
    {RewriteRule::SumWith, "sum(pair(a, b), pair(c, d))", "pair(sum(a, c), sum(b, d))"},
    {RewriteRule::SumPlus, "case(sum(p, q), x.x, y.y)", "sum(case(p, x.x, y.y), case(q, x.x, y.y))"},
    {RewriteRule::SumSup, "sum(sup(a, b), sup(c, d))", "sup(sum(a, c), sum(b, d))"},
    {RewriteRule::ScalOne, "scal(2, star(3))", "star(6)"},
    {RewriteRule::ScalTens, "let_tens(scal(2, p), a, b, unit_elim(a, b))", "scal(2, let_tens(p, a, b, unit_elim(a, b)))"},
    {RewriteRule::ScalLam, "scal(2, lam(x, x))", "lam(x, scal(2, x))"},
    {RewriteRule::ScalTop, "scal(2, unit)", "unit"},
    {RewriteRule::ScalWith, "scal(2, pair(a, b))", "pair(scal(2, a), scal(2, b))"},
    {RewriteRule::ScalPlus, "case(scal(2, p), x.x, y.y)", "scal(2, case(p, x.x, y.y))"},
    {RewriteRule::ScalSup, "scal(2, sup(a, b))", "sup(scal(2, a), scal(2, b))"},
};

bool same_distribution(const Distribution& a, const Distribution& b) {
  auto x = aggregate(a);
  auto y = aggregate(b);
  if (x.size() != y.size()) return false;
  for (const auto& o : x) {
    bool found = false;
    for (const auto& p : y) found = found || (alpha_equal(o.value, p.value) && o.weight == p.weight);
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST(Rewrite, EachRuleContractsAtTheRoot) {
  std::set<RewriteRule> seen;
  for (const auto& c : kRuleCases) {
    auto r = contract_root(parse_term(c.redex));
    ASSERT_EQ(r.size(), 1u) << c.redex;
    EXPECT_EQ(r[0].first.rule, c.rule) << c.redex;
    EXPECT_TRUE(r[0].first.weight.is_one());
    EXPECT_TRUE(alpha_equal(r[0].second, parse_term(c.contractum)))
        << c.redex << " gave " << r[0].second.to_string();
    seen.insert(c.rule);
  }
  EXPECT_EQ(seen.size(), kRewriteRuleCount - 2);
}

TEST(Rewrite, SupEliminationForksWithWeights) {
  auto r = contract_root(parse_term("sup_elim{1/4,3/4}(sup(star(1), star(2)), x.scal(2, x), y.y)"));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].first.rule, RewriteRule::SupElimLeft);
  EXPECT_EQ(r[0].first.weight, Scalar(Rational(1, 4)));
  EXPECT_EQ(r[0].second, parse_term("scal(2, star(1))"));
  EXPECT_EQ(r[1].first.rule, RewriteRule::SupElimRight);
  EXPECT_EQ(r[1].first.weight, Scalar(Rational(3, 4)));
  EXPECT_EQ(r[1].second, parse_term("star(2)"));
  EXPECT_TRUE(is_sup_branch(r[1].first.rule));
}

TEST(Rewrite, ContractionAvoidsCapture) {
  auto r = contract_root(parse_term("app(lam(x, lam(y, app(x, y))), y)"));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(alpha_equal(r[0].second, parse_term("lam(w, app(y, w))")));
}

TEST(Rewrite, NoRedexOnValues) {
  for (const char* v : {"star(1)", "unit", "lam(x, x)", "pair(star(1), unit)", "inl(star(1))", "sum(x, y)",
                        "scal(2, x)", "sum(star(1), unit)"}) {
    EXPECT_TRUE(contract_root(parse_term(v)).empty()) << v;
  }
  EXPECT_TRUE(is_normal(parse_term("tens(star(1), lam(x, x))")));
  EXPECT_FALSE(is_normal(parse_term("tens(star(1), fst(pair(unit, unit)))")));
}

TEST(Rewrite, StepAllIsPreOrder) {
  auto steps = step_all(parse_term("fst(pair(sum(star(1), star(2)), scal(2, star(1))))"));
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(steps[0].first.position, Position{});
  EXPECT_EQ(steps[1].first.position, (Position{0, 0}));
  EXPECT_EQ(steps[2].first.position, (Position{0, 1}));
}

TEST(Rewrite, StrategiesPickTheirRedex) {
  Term t = parse_term("tens(fst(pair(star(1), unit)), scal(2, star(3)))");
  auto pick = [&](Strategy s) {
    ReduceOptions o;
    o.strategy = s;
    return next_steps(t, o).at(0).first.position;
  };
  EXPECT_EQ(pick(Strategy::LeftmostOutermost), Position{0});
  EXPECT_EQ(pick(Strategy::RightmostOutermost), Position{1});
  Term nested = parse_term("fst(pair(fst(pair(star(1), unit)), unit))");
  ReduceOptions inner;
  inner.strategy = Strategy::LeftmostInnermost;
  EXPECT_EQ(next_steps(nested, inner).at(0).first.position, (Position{0, 0}));
  EXPECT_TRUE(next_steps(parse_term("star(1)"), {}).empty());
}

TEST(Rewrite, NormalizeRefusesToChoose) {
  EXPECT_THROW(normalize(corpus_entry("adequacy_u")->term), SupBranchEncountered);
  EXPECT_EQ(normalize(parse_term("unit_elim(star(2), scal(3, star(1)))")), parse_term("star(6)"));
}

TEST(Rewrite, BudgetIsEnforced) {
  ReduceOptions o;
  o.budget = 1;
  EXPECT_THROW(normalize(parse_term("fst(pair(fst(pair(star(1), unit)), unit))"), o), ReductionBudgetExceeded);
  o.budget = 2;
  EXPECT_EQ(normalize(parse_term("fst(pair(fst(pair(star(1), unit)), unit))"), o), parse_term("star(1)"));
}

TEST(Rewrite, DistributionOfAChoice) {
  auto d = distribution(corpus_entry("adequacy_u")->term);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].weight, Scalar(Rational(1, 2)));
  EXPECT_EQ(d[1].weight, Scalar(Rational(1, 2)));
  EXPECT_TRUE(total_mass(d).is_one());
  EXPECT_EQ(paths(corpus_entry("adequacy_u")->term).size(), 2u);
}

TEST(Rewrite, AggregateMergesAlphaEquivalentValues) {
  Distribution d{{Scalar(Rational(1, 4)), parse_term("lam(x, x)")},
                 {Scalar(Rational(1, 4)), parse_term("star(1)")},
                 {Scalar(Rational(1, 2)), parse_term("lam(y, y)")}};
  auto a = aggregate(d);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].value, parse_term("lam(x, x)"));
  EXPECT_EQ(a[0].weight, Scalar(Rational(3, 4)));
  EXPECT_EQ(a[1].weight, Scalar(Rational(1, 4)));
  EXPECT_TRUE(total_mass(a).is_one());
}

TEST(Rewrite, SumOfDistributionIsOrdered) {
  Distribution d{{Scalar(Rational(1, 2)), parse_term("star(2)")}, {Scalar(Rational(1, 2)), parse_term("star(1)")}};
  EXPECT_EQ(sum_of_distribution(d), parse_term("sum(scal(1/2, star(1)), scal(1/2, star(2)))"));
  Distribution three{{Scalar(Rational(1)), parse_term("star(3)")},
                     {Scalar(Rational(1)), parse_term("star(1)")},
                     {Scalar(Rational(1)), parse_term("star(2)")}};
  EXPECT_EQ(sum_of_distribution(three),
            parse_term("sum(sum(scal(1, star(1)), scal(1, star(2))), scal(1, star(3)))"));
  EXPECT_THROW(sum_of_distribution({}), EmptyDistribution);
}

TEST(Rewrite, IntroductionShapes) {
  auto p = [](const char* s) { return parse_proposition(s); };
  auto t = [](const char* s) { return parse_term(s); };
  EXPECT_TRUE(matches_introduction_shape(t("star(1)"), p("one")));
  EXPECT_TRUE(matches_introduction_shape(t("unit"), p("top")));
  EXPECT_TRUE(matches_introduction_shape(t("pair(unit, unit)"), p("top & top")));
  EXPECT_TRUE(matches_introduction_shape(t("sup(unit, unit)"), p("top (o) top")));
  EXPECT_TRUE(matches_introduction_shape(t("lam(x, x)"), p("one -o one")));
  for (const char* v : {"tens(star(1), star(1))", "sum(tens(star(1), star(1)), tens(star(1), star(2)))",
                        "scal(2, tens(star(1), star(1)))"}) {
    EXPECT_TRUE(matches_introduction_shape(t(v), p("one (*) one"))) << v;
  }
  for (const char* v : {"inl(star(1))", "inr(star(1))", "sum(inl(star(1)), inr(star(1)))", "scal(2, inl(star(1)))"}) {
    EXPECT_TRUE(matches_introduction_shape(t(v), p("one (+) one"))) << v;
  }
  EXPECT_FALSE(matches_introduction_shape(t("star(1)"), p("top")));
  EXPECT_FALSE(matches_introduction_shape(t("sum(star(1), star(1))"), p("one")));
  EXPECT_FALSE(matches_introduction_shape(t("pair(unit, unit)"), p("top (o) top")));
  EXPECT_FALSE(matches_introduction_shape(t("unit"), p("zero")));
}

TEST(Rewrite, RuleNamesAreDistinct) {
  std::set<std::string> names;
  for (auto r : all_rewrite_rules()) names.insert(to_string(r));
  EXPECT_EQ(names.size(), kRewriteRuleCount);
}

TEST(RewriteProperty, OutermostStrategiesAgreeOnCorpus) {
  ReduceOptions ro;
  ro.strategy = Strategy::RightmostOutermost;
  for (const auto& e : corpus()) {
    EXPECT_TRUE(same_distribution(distribution(e.term), distribution(e.term, default_semiring(), ro))) << e.name;
  }
}

TEST(RewriteProperty, SupFreeCorpusTermsNormalizeAlike) {
  for (const auto& e : corpus()) {
    std::optional<Term> lo;
    try {
      lo = normalize(e.term);
    } catch (const SupBranchEncountered&) {
      continue;
    }
    for (auto s : {Strategy::RightmostOutermost, Strategy::LeftmostInnermost, Strategy::RightmostInnermost,
                   Strategy::Random}) {
      ReduceOptions o;
      o.strategy = s;
      o.seed = 3;
      EXPECT_TRUE(alpha_equal(normalize(e.term, o), *lo)) << e.name;
    }
  }
}
