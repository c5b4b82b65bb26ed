#include "supcalc/corpus.hpp"
#include "supcalc/error.hpp"
#include "supcalc/parser.hpp"
#include "supcalc/typing.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace supcalc;

namespace {

Proposition type_of(const std::string& term, const std::string& ctx = "") {
  return typecheck(parse_context(ctx), parse_term(term)).type;
}

TypeErrorKind error_kind(const std::string& term, const std::string& ctx = "") {
  try {
    typecheck(parse_context(ctx), parse_term(term));
  } catch (const TypeError& e) {
    return e.kind();
  }
  ADD_FAILURE() << term << " typechecked";
  return TypeErrorKind::TypeMismatch;
}

}  // namespace

TEST(Typing, InfersIntroductionTypes) {
  EXPECT_EQ(type_of("star(2)").to_string(), "one");
  EXPECT_EQ(type_of("unit").to_string(), "top");
  EXPECT_EQ(type_of("lam(x, x)").to_string(), "one -o one");
  EXPECT_EQ(type_of("tens(star(1), unit)").to_string(), "one (*) top");
  EXPECT_EQ(type_of("pair(star(1), inl(star(2)))").to_string(), "one & (one (+) one)");
  EXPECT_EQ(type_of("sup(star(1), unit)").to_string(), "one (o) top");
  EXPECT_EQ(type_of("lam(f, app(f, star(1)))").to_string(), "(one -o one) -o one");
}

TEST(Typing, UsesTheExpectedType) {
  auto id = parse_term("lam(x, x)");
  auto want = parse_proposition("(one & one) -o (one & one)");
  EXPECT_EQ(typecheck(Context(), id, want).type, want);
  EXPECT_THROW(typecheck(Context(), parse_term("star(1)"), parse_proposition("top")), TypeError);
}

TEST(Typing, OpenTerms) {
  EXPECT_EQ(type_of("app(f, x)", "f:one -o top, x:one").to_string(), "top");
  EXPECT_EQ(type_of("pair(x, x)", "x:one").to_string(), "one & one");
  EXPECT_EQ(type_of("case(x, a.a, b.zero_elim(b))", "x:one (+) zero").to_string(), "one");
}

TEST(Typing, ErrorKinds) {
  EXPECT_EQ(error_kind("y", "x:one"), TypeErrorKind::UnboundVariable);
  EXPECT_EQ(error_kind("tens(x, x)", "x:one"), TypeErrorKind::LinearViolation);
  EXPECT_EQ(error_kind("star(1)", "x:one"), TypeErrorKind::LinearViolation);
  EXPECT_EQ(error_kind("app(star(1), star(1))"), TypeErrorKind::TypeMismatch);
  EXPECT_EQ(error_kind("fst(star(1))"), TypeErrorKind::TypeMismatch);
  EXPECT_EQ(error_kind("sum(star(1), unit)"), TypeErrorKind::TypeMismatch);
}

TEST(Typing, AbsorbingTermsTakeSpareVariables) {
  EXPECT_TRUE(absorbs(parse_term("unit")));
  EXPECT_TRUE(absorbs(parse_term("tens(x, unit)")));
  EXPECT_FALSE(absorbs(parse_term("pair(unit, x)")));
  EXPECT_FALSE(absorbs(parse_term("star(1)")));
  EXPECT_EQ(type_of("tens(x, unit)", "x:one, y:one").to_string(), "one (*) top");
  EXPECT_EQ(type_of("zero_elim(z)", "z:zero, y:one & one").to_string(), "one");
  EXPECT_THROW(typecheck(parse_context("x:one, y:one"), parse_term("tens(x, star(1))")), TypeError);
}

TEST(Typing, RuleTableIsComplete) {
  auto rules = all_rules();
  EXPECT_EQ(rules.size(), kRuleCount);
  std::set<std::string> names;
  for (auto r : rules) names.insert(to_string(r));
  EXPECT_EQ(names.size(), kRuleCount);
}

TEST(Typing, CorpusDerivationsValidate) {
  for (const auto& e : corpus()) {
    auto d = typecheck(e.context, e.term, e.type);
    EXPECT_EQ(d.type, e.type) << e.name;
    auto diag = validate(d);
    EXPECT_TRUE(diag.ok) << e.name << ": " << (diag.problems.empty() ? "" : diag.problems.front());
    EXPECT_EQ(rules_used(d).size(), d.size()) << e.name;
  }
}

TEST(Typing, TamperedDerivationsAreRejected) {
  auto d = typecheck(parse_term("tens(star(1), lam(x, x))"));
  ASSERT_TRUE(validate(d).ok);

  auto wrong_type = d;
  wrong_type.type = parse_proposition("one (*) one");
  EXPECT_FALSE(validate(wrong_type).ok);

  auto wrong_rule = d;
  wrong_rule.rule = Rule::WithI;
  EXPECT_FALSE(validate(wrong_rule).ok);

  auto wrong_leaf = d;
  wrong_leaf.premises[1].premises[0].type = parse_proposition("top");
  EXPECT_FALSE(validate(wrong_leaf).ok);

  auto open = typecheck(parse_context("x:one, y:one"), parse_term("tens(x, y)"));
  ASSERT_TRUE(validate(open).ok);
  ASSERT_TRUE(open.split.has_value());
  auto overlap = open;
  overlap.split->order = {0, 0};
  EXPECT_FALSE(validate(overlap).ok);
}

TEST(Typing, SubjectReductionOnCorpus) {
  for (const auto& e : corpus()) {
    auto report = check_subject_reduction(e.term, e.context);
    EXPECT_TRUE(report.ok()) << e.name << ": " << (report.violations.empty() ? "" : report.violations.front());
  }
}
