#include "supcalc/corpus.hpp"
#include "supcalc/error.hpp"
#include "supcalc/observe.hpp"
#include "supcalc/parser.hpp"
#include "supcalc/typing.hpp"

#include <gtest/gtest.h>

using namespace supcalc;

namespace {

std::vector<std::string> printed(const std::vector<TermContext>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.to_string());
  return out;
}

}  // namespace

TEST(Observe, MixedEquivalence) {
  auto one = Proposition::one();
  EXPECT_TRUE(mixed_equiv(corpus_entry("adequacy_t")->term, corpus_entry("adequacy_u")->term, one));
  EXPECT_TRUE(mixed_equiv(parse_term("sup_elim{1/4,3/4}(sup(star(4), star(0)), x.x, y.y)"), parse_term("star(1)"), one));
  EXPECT_FALSE(mixed_equiv(parse_term("star(1)"), parse_term("star(2)"), one));
  EXPECT_TRUE(mixed_equiv(parse_term("unit"), parse_term("scal(3, unit)"), Proposition::top()));
  auto ab = parse_proposition("one & one");
  EXPECT_TRUE(mixed_equiv(parse_term("pair(star(1), star(2))"), parse_term("sum(pair(star(1), star(0)), pair(star(0), star(2)))"), ab));
  EXPECT_THROW(mixed_equiv(parse_term("inl(star(1))"), parse_term("inl(star(1))"), parse_proposition("one (+) one")),
               UnsupportedType);
  EXPECT_THROW(mixed_equiv(parse_term("unit"), parse_term("star(1)"), one), TypeError);
}

TEST(Observe, EliminationContextsOfSmallTypes) {
  EXPECT_EQ(printed(enumerate_elim_contexts(Proposition::one(), 3)), std::vector<std::string>{"[]"});
  EXPECT_EQ(printed(enumerate_elim_contexts(parse_proposition("one & one"), 1)),
            (std::vector<std::string>{"fst([])", "snd([])"}));
  EXPECT_EQ(printed(enumerate_elim_contexts(parse_proposition("one (o) one"), 1)),
            (std::vector<std::string>{"supfst([])", "supsnd([])"}));
  EXPECT_EQ(printed(enumerate_elim_contexts(parse_proposition("(one & one) & one"), 1)),
            std::vector<std::string>{"snd([])"});
  EXPECT_EQ(enumerate_elim_contexts(parse_proposition("(one & one) & one"), 2).size(), 3u);
}

TEST(Observe, DefaultArguments) {
  auto v = default_arguments(parse_proposition("one & one"));
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], parse_term("pair(star(1),star(1))"));
  for (const char* p : {"one", "one & one", "one -o one & one", "one & one -o one -o one"}) {
    auto prop = parse_proposition(p);
    auto args = default_arguments(prop);
    EXPECT_FALSE(args.empty()) << p;
    for (const auto& t : args) EXPECT_EQ(typecheck(Context(), t, prop).type, prop) << p;
  }
}

TEST(Observe, FilledContextsTypecheckAtBasicTypes) {
  for (const char* p : {"one & one", "one -o one", "one (*) one", "one (+) (one & one)", "(one (o) one) & one",
                        "(one -o one) -o one"}) {
    auto a = parse_proposition(p);
    auto ctxs = enumerate_elim_contexts(a, 3);
    EXPECT_FALSE(ctxs.empty()) << p;
    for (const auto& c : ctxs) {
      auto d = typecheck(Context({{"h", a}}), c.fill(Term::var("h")));
      EXPECT_TRUE(d.type.is_basic()) << p << " " << c.to_string();
    }
  }
}

TEST(Observe, ContextsCannotSeparateTheChoicePair) {
  auto t = corpus_entry("adequacy_t")->term;
  auto u = corpus_entry("adequacy_u")->term;
  auto a = parse_proposition("one (o) one");
  Term wt = Term::sup(t, parse_term("star(1/2)"));
  Term wu = Term::sup(u, parse_term("star(1/2)"));
  auto ctxs = enumerate_elim_contexts(a, 2);
  ASSERT_FALSE(ctxs.empty());
  for (const auto& c : ctxs) {
    Term l = c.fill(wt), r = c.fill(wu);
    auto ty = typecheck(l).type;
    EXPECT_TRUE(mixed_equiv(l, r, ty)) << c.to_string();
  }
}
