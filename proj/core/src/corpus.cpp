#include "supcalc/corpus.hpp"

#include "supcalc/matmodel.hpp"
#include "supcalc/parser.hpp"
#include "supcalc/typing.hpp"
#include "supcalc/veccodec.hpp"

namespace supcalc {

namespace {

struct Spec {
  const char* name;
  const char* term;
  const char* type;  // nullptr: inferred
};

// clang-format off
const Spec kSources[] = {
  // weighted choice with the same matrix and different distributions
  {"adequacy_t", "sup_elim{1/2,1/2}(sup(star(1/2),star(1/2)),x.x,y.y)", nullptr},
  {"adequacy_u", "sup_elim{1/2,1/2}(sup(star(3/4),star(1/4)),x.x,y.y)", nullptr},
  // equal matrices, neither reduces to the other
  {"eta_expanded", "lam(x, pair(fst(x), snd(x)))", "(one & one) -o (one & one)"},
  {"eta_identity", "lam(x, x)", "(one & one) -o (one & one)"},
  // case over an injected projection: deterministic counterparts of sup_elim
  {"choice_via_sup_left", "case(inl(supfst(sup(star(2), star(3)))), x.x, y.scal(1/2, y))", nullptr},
  {"choice_via_sup_right", "case(inr(supsnd(sup(star(2), star(3)))), x.x, y.scal(1/2, y))", nullptr},
  {"choice_via_with_left", "case(inl(fst(pair(star(2), star(3)))), x.x, y.scal(1/2, y))", nullptr},
  {"choice_via_with_right", "case(inr(snd(pair(star(2), star(3)))), x.x, y.scal(1/2, y))", nullptr},

  // one redex per rule
  {"unit_elim", "unit_elim(star(2), star(3))", nullptr},
  {"tens_elim", "let_tens(tens(star(2), star(3)), a, b, unit_elim(a, b))", nullptr},
  {"beta_swap", "app(lam(p, let_tens(p, a, b, tens(b, a))), tens(star(1), star(2)))", nullptr},
  {"proj1", "fst(pair(star(1), star(2)))", nullptr},
  {"proj2", "snd(pair(star(1), star(2)))", nullptr},
  {"case_inl", "case(inl(star(2)), x.scal(3, x), y.y)", nullptr},
  {"case_inr", "case(inr(star(2)), x.x, y.scal(3, y))", nullptr},
  {"sup_proj1", "supfst(sup(star(1), star(2)))", nullptr},
  {"sup_proj2", "supsnd(sup(star(1), star(2)))", nullptr},
  {"sum_one", "sum(star(1/2), star(1/4))", nullptr},
  {"sum_tens", "let_tens(sum(tens(star(1), star(2)), tens(star(3), star(1/2))), a, b, unit_elim(a, b))", nullptr},
  {"sum_lam", "sum(lam(x, x), lam(y, scal(2, y)))", nullptr},
  {"sum_top", "sum(unit, unit)", nullptr},
  {"sum_with", "sum(pair(star(1), star(2)), pair(star(3), star(4)))", nullptr},
  {"sum_plus", "case(sum(inl(star(1)), inr(star(2))), x.x, y.scal(2, y))", nullptr},
  {"sum_sup", "sum(sup(star(1), star(2)), sup(star(3), star(1/4)))", nullptr},
  {"scal_one", "scal(1/2, star(3))", nullptr},
  {"scal_tens", "let_tens(scal(2, tens(star(1), star(3))), a, b, unit_elim(a, b))", nullptr},
  {"scal_lam", "scal(3, lam(x, x))", nullptr},
  {"scal_top", "scal(2, unit)", nullptr},
  {"scal_with", "scal(1/2, pair(star(2), star(4)))", nullptr},
  {"scal_plus", "case(scal(3, inl(star(1))), x.x, y.y)", nullptr},
  {"scal_sup", "scal(1/4, sup(star(2), star(4)))", nullptr},

  // values and rules without redexes
  {"star", "star(2)", nullptr},
  {"unit", "unit", nullptr},
  {"with_top", "pair(star(1), unit)", nullptr},
  {"zero_elim", "lam(z, zero_elim(z))", "zero -o one"},
  {"zero_absorbs", "lam(z, lam(w, zero_elim(z)))", "zero -o (one -o (one & one))"},
  {"unit_absorbs", "lam(x, lam(y, unit))", nullptr},
  {"injected_sum", "sum(inl(star(1)), inl(star(2)))", "one (+) one"},
  {"tensor_sum", "sum(tens(star(1), star(2)), tens(star(3), star(4)))", nullptr},
  {"nested_sup", "sup(sup(star(1), star(2)), star(3))", nullptr},

  // several steps
  {"let_nested", "let_tens(tens(tens(star(1), star(2)), star(3)), p, c, let_tens(p, a, b, unit_elim(a, unit_elim(b, c))))", nullptr},
  {"curried_pair", "app(app(lam(a, lam(b, tens(a, b))), star(1)), star(2))", nullptr},
  {"apply_twice", "app(app(lam(f, lam(a, app(f, a))), lam(x, scal(2, x))), star(5))", nullptr},
  {"fan_out", "app(lam(x, pair(scal(2, x), scal(3, x))), star(5))", nullptr},
  {"fan_out_map", "lam(x, pair(scal(2, x), scal(3, x)))", nullptr},
  {"shared_case", "app(lam(z, case(inr(star(2)), x.unit_elim(x, z), y.unit_elim(y, z))), star(3))", nullptr},
  {"project_then_add", "app(lam(x, sum(app(lam(y, y), fst(x)), snd(x))), pair(star(1), star(2)))", nullptr},
  {"scaled_sums_under_let", "let_tens(sum(tens(star(1), star(2)), scal(2, tens(star(3), star(4)))), a, b, tens(b, a))", nullptr},
  {"scal_of_sum", "scal(2, sum(star(1), star(3)))", nullptr},
  {"sum_chain", "sum(sum(star(1), star(2)), star(3))", nullptr},
  {"higher_order_sum", "app(lam(f, app(f, star(2))), sum(lam(x, x), lam(y, scal(3, y))))", nullptr},
  {"tensor_of_map", "let_tens(tens(lam(x, scal(2, x)), star(3)), f, a, app(f, a))", nullptr},
  {"select_map", "app(snd(pair(lam(x, x), lam(y, scal(2, y)))), star(4))", nullptr},

  // weighted choices in context
  {"choice_nested", "sup_elim{1/4,3/4}(sup(star(1), star(2)), x.sup_elim{1/2,1/2}(sup(star(3), star(4)), a.unit_elim(x, a), b.unit_elim(x, b)), y.scal(2, y))", nullptr},
  {"choice_shared", "app(lam(z, sup_elim{1/2,1/2}(sup(star(1), star(2)), x.unit_elim(x, z), y.unit_elim(z, y))), star(3))", nullptr},
  {"choice_in_tensor", "tens(sup_elim{1/2,1/2}(sup(star(1), star(0)), x.x, y.y), star(2))", nullptr},
  {"choice_in_pair", "fst(pair(sup_elim{1/4,3/4}(sup(star(1), star(2)), x.x, y.y), star(7)))", nullptr},
  {"choice_sum", "sum(sup_elim{1/2,1/2}(sup(star(1), star(2)), x.x, y.y), sup_elim{1/2,1/2}(sup(star(3), star(4)), x.x, y.y))", nullptr},
  {"choice_certain", "sup_elim{1,0}(sup(star(1), star(2)), x.x, y.y)", nullptr},
  {"choice_of_maps", "sup_elim{1/2,1/2}(sup(lam(x, x), lam(y, scal(2, y))), f.app(f, star(1)), g.app(g, star(3)))", nullptr},
  {"choice_of_injections", "sup_elim{3/4,1/4}(sup(inl(star(1)), inr(star(2))), x.case(x, a.a, b.b), y.case(y, a.a, b.b))", nullptr},
  {"choice_under_lam", "lam(z, sup_elim{1/2,1/2}(sup(star(1), star(3)), x.unit_elim(x, z), y.unit_elim(y, z)))", nullptr},
  {"choice_of_pairs", "snd(sup_elim{1/2,1/2}(sup(pair(star(1), star(2)), pair(star(3), star(4))), x.scal(2, x), y.y))", nullptr},
};
// clang-format on

model::Mat matrix(std::size_t rows, std::size_t cols, std::initializer_list<int> entries) {
  std::vector<Scalar> e;
  for (int v : entries) e.emplace_back(Rational(v));
  return model::Mat(rows, cols, std::move(e));
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;
  for (const auto& src : kSources) {
    Term t = parse_term(src.term);
    std::optional<Proposition> expected;
    if (src.type) expected = parse_proposition(src.type);
    Derivation d = typecheck(Context(), t, expected);
    out.push_back({src.name, d.term, Context(), d.type});
  }

  auto one = Proposition::one();
  auto two = Proposition::with(one, one);
  auto three = Proposition::with(one, two);
  struct Encoded {
    const char* name;
    model::Mat m;
    Proposition from, to;
  };
  const Encoded encoded[] = {
      {"encode_2x2", matrix(2, 2, {1, 2, 3, 4}), two, two},
      {"encode_row", matrix(1, 3, {1, 1, 1}), three, one},
      {"encode_column", matrix(3, 1, {2, 0, 1}), one, three},
      {"encode_zero", matrix(2, 2, {0, 0, 0, 0}), two, two},
  };
  for (const auto& e : encoded) {
    Term t = encode_matrix(e.m, e.from, e.to);
    out.push_back({e.name, t, Context(), typecheck(Context(), t, Proposition::lollipop(e.from, e.to)).type});
  }
  Term applied = Term::app(encode_matrix(encoded[0].m, two, two), parse_term("pair(star(5), star(6))"));
  out.push_back({"encode_2x2_applied", applied, Context(), typecheck(Context(), applied).type});
  Term summed = Term::app(encode_matrix(encoded[1].m, three, one),
                          parse_term("sum(pair(star(1), pair(star(2), star(3))), pair(star(1), pair(star(0), star(1))))"));
  out.push_back({"encode_row_on_sum", summed, Context(), typecheck(Context(), summed).type});
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

std::optional<CorpusEntry> corpus_entry(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e;
  }
  return std::nullopt;
}

}  // namespace supcalc
