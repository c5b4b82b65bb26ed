#include "supcalc/laws.hpp"

#include "supcalc/matmodel.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

namespace supcalc::model {

namespace {

constexpr std::array<std::string_view, kLawFamilyCount> kNames = {
    "symmetric monoidal coherence",
    "biproducts and enrichment",
    "distributors are invertible",
    "scalar maps are natural",
    "scalar maps and the connectives",
    "closed structure",
    "weighted codiagonal is natural",
    "weighted codiagonal through distributors",
    "diagonal through inverse distributors",
    "weighted codiagonal on biproducts",
    "weighted codiagonal retracts the diagonal",
    "weighted codiagonal through delta",
    "diagonal through delta",
    "nested weighted codiagonals",
};

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::size_t max_dim, const Semiring& s)
      : rng_(seed), max_dim_(std::max<std::size_t>(max_dim, 1)), s_(s) {}

  Obj obj() { return Obj{std::uniform_int_distribution<std::size_t>(1, max_dim_)(rng_)}; }

  Scalar scalar() {
    switch (s_.kind()) {
      case SemiringKind::NonNegRational: return pick({"0", "1", "1/2", "1/4", "3/4", "2", "3"});
      case SemiringKind::Rational: return pick({"0", "1", "1/2", "1/4", "3/4", "2", "3", "-1", "-1/2", "-3"});
      case SemiringKind::Boolean: return pick({"0", "1"});
      case SemiringKind::Float: return Scalar(std::uniform_real_distribution<double>(-1.0, 3.0)(rng_));
    }
    throw std::logic_error("unknown semiring");
  }

  Mat map(Obj from, Obj to) {
    Mat m(to.dim, from.dim, s_);
    for (std::size_t i = 0; i < to.dim; ++i) {
      for (std::size_t j = 0; j < from.dim; ++j) m.set(i, j, scalar());
    }
    return m;
  }

  WeightPair weights() {
    switch (s_.kind()) {
      case SemiringKind::NonNegRational:
      case SemiringKind::Rational: {
        std::vector<std::pair<std::string, std::string>> pool = {
            {"0", "1"}, {"1/4", "3/4"}, {"1/2", "1/2"}, {"3/4", "1/4"}, {"1", "0"}};
        if (s_.kind() == SemiringKind::Rational) pool.push_back({"2", "-1"});
        const auto& pq = pool[index(pool.size())];
        return make_weight_pair(s_, s_.from_literal(pq.first), s_.from_literal(pq.second));
      }
      case SemiringKind::Boolean: {
        static const std::array<std::pair<bool, bool>, 3> pool = {{{true, false}, {false, true}, {true, true}}};
        const auto& pq = pool[index(pool.size())];
        return make_weight_pair(s_, Scalar(pq.first), Scalar(pq.second));
      }
      case SemiringKind::Float: {
        double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
        return make_weight_pair(s_, Scalar(p), Scalar(1.0 - p));
      }
    }
    throw std::logic_error("unknown semiring");
  }

  /// A pair that is not in the weight set.
  std::pair<Scalar, Scalar> non_weights() const {
    switch (s_.kind()) {
      case SemiringKind::Boolean: return {Scalar(false), Scalar(false)};
      case SemiringKind::Float: return {Scalar(0.5), Scalar(0.25)};
      default: return {s_.from_literal("1/2"), s_.from_literal("1/4")};
    }
  }

 private:
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  Scalar pick(std::initializer_list<const char*> pool) {
    return s_.from_literal(*(pool.begin() + index(pool.size())));
  }

  std::mt19937_64 rng_;
  std::size_t max_dim_;
  const Semiring& s_;
};

class Family {
 public:
  explicit Family(LawFamilyResult& r) : r_(r) {}

  void expect(const Mat& lhs, const Mat& rhs, const char* law) {
    ++r_.checks;
    if (lhs == rhs) return;
    if (r_.failures++ == 0) r_.first_failure = law;
  }

 private:
  LawFamilyResult& r_;
};

Mat id(Obj a, const Semiring& s) { return identity(a, s); }
Mat alpha(Obj a, Obj b, Obj c, const Semiring& s) { return coherence(Coherence::Alpha, {a, b, c}, s); }

void monoidal(Family& f, Sampler& g, const Semiring& s) {
  Obj a = g.obj(), b = g.obj(), c = g.obj(), d = g.obj();
  Obj i = unit_obj();
  auto ab = tensor_obj(a, b), bc = tensor_obj(b, c), cd = tensor_obj(c, d);
  f.expect(compose(alpha(a, b, cd, s), alpha(ab, c, d, s)),
           compose(tensor_mat(id(a, s), alpha(b, c, d, s)),
                   compose(alpha(a, bc, d, s), tensor_mat(alpha(a, b, c, s), id(d, s)))),
           "pentagon");
  f.expect(compose(tensor_mat(id(a, s), coherence(Coherence::LambdaU, {b}, s)), alpha(a, i, b, s)),
           tensor_mat(coherence(Coherence::RhoU, {a}, s), id(b, s)), "triangle");
  f.expect(compose(coherence(Coherence::AlphaInv, {a, b, c}, s), alpha(a, b, c, s)), id(tensor_obj(ab, c), s),
           "associator inverse");
  f.expect(compose(sigma(b, a, s), sigma(a, b, s)), id(ab, s), "symmetry is an involution");
  f.expect(compose(alpha(b, c, a, s), compose(sigma(a, bc, s), alpha(a, b, c, s))),
           compose(tensor_mat(id(b, s), sigma(a, c, s)),
                   compose(alpha(b, a, c, s), tensor_mat(sigma(a, b, s), id(c, s)))),
           "hexagon");
  Obj a2 = g.obj(), b2 = g.obj();
  Mat fa = g.map(a, a2), gb = g.map(b, b2);
  f.expect(compose(tensor_mat(gb, fa), sigma(a, b, s)), compose(sigma(a2, b2, s), tensor_mat(fa, gb)),
           "symmetry is natural");
  Obj a3 = g.obj(), b3 = g.obj();
  Mat fa2 = g.map(a2, a3), gb2 = g.map(b2, b3);
  f.expect(tensor_mat(compose(fa2, fa), compose(gb2, gb)), compose(tensor_mat(fa2, gb2), tensor_mat(fa, gb)),
           "tensor is functorial");
}

void biproducts(Family& f, Sampler& g, const Semiring& s) {
  Obj a = g.obj(), b = g.obj(), c = g.obj();
  auto ab = biproduct_obj(a, b);
  f.expect(compose(proj1(a, b, s), inj1(a, b, s)), id(a, s), "first projection after first injection");
  f.expect(compose(proj2(a, b, s), inj2(a, b, s)), id(b, s), "second projection after second injection");
  f.expect(compose(proj1(a, b, s), inj2(a, b, s)), zero_mat(b, a, s), "first projection kills second summand");
  f.expect(compose(proj2(a, b, s), inj1(a, b, s)), zero_mat(a, b, s), "second projection kills first summand");
  f.expect(add(compose(inj1(a, b, s), proj1(a, b, s)), compose(inj2(a, b, s), proj2(a, b, s))), id(ab, s),
           "injections and projections split the identity");
  Mat fa = g.map(c, a), gb = g.map(c, b);
  Mat p = pair(fa, gb);
  f.expect(compose(proj1(a, b, s), p), fa, "pairing, first component");
  f.expect(compose(proj2(a, b, s), p), gb, "pairing, second component");
  f.expect(pair(compose(proj1(a, b, s), p), compose(proj2(a, b, s), p)), p, "pairing is unique");
  Mat ha = g.map(a, c), kb = g.map(b, c);
  Mat q = copair(ha, kb);
  f.expect(compose(q, inj1(a, b, s)), ha, "copairing, first component");
  f.expect(compose(q, inj2(a, b, s)), kb, "copairing, second component");
  f.expect(copair(compose(q, inj1(a, b, s)), compose(q, inj2(a, b, s))), q, "copairing is unique");
  Mat u = g.map(a, b), v = g.map(a, b);
  f.expect(add(u, v), compose(codiag(b, s), compose(biproduct_mat(u, v), diag(a, s))),
           "sum is codiagonal after diagonal");
  Mat h = g.map(b, c), k = g.map(c, a);
  f.expect(compose(h, add(u, v)), add(compose(h, u), compose(h, v)), "composition distributes on the left");
  f.expect(compose(add(u, v), k), add(compose(u, k), compose(v, k)), "composition distributes on the right");
  f.expect(compose(zero_mat(b, c, s), u), zero_mat(a, c, s), "zero absorbs on the left");
  f.expect(compose(u, zero_mat(c, a, s)), zero_mat(c, b, s), "zero absorbs on the right");
  f.expect(add(u, zero_mat(a, b, s)), u, "zero is the unit of sum");
}

void distributor_inverses(Family& f, Sampler& g, const Semiring& s) {
  Obj a = g.obj(), b = g.obj(), c = g.obj();
  Mat d = distribute(Distributor::D, a, b, c, s), di = distribute(Distributor::DInv, a, b, c, s);
  f.expect(compose(di, d), id(tensor_obj(biproduct_obj(a, b), c), s), "d_inv after d");
  f.expect(compose(d, di), id(biproduct_obj(tensor_obj(a, c), tensor_obj(b, c)), s), "d after d_inv");
  Mat gm = distribute(Distributor::Gamma, a, b, c, s), gi = distribute(Distributor::GammaInv, a, b, c, s);
  f.expect(compose(gi, gm), id(hom_obj(a, biproduct_obj(b, c)), s), "gamma_inv after gamma");
  f.expect(compose(gm, gi), id(biproduct_obj(hom_obj(a, b), hom_obj(a, c)), s), "gamma after gamma_inv");
}

void scalar_naturality(Family& f, Sampler& g, const Semiring& s) {
  Obj a = g.obj(), b = g.obj();
  Scalar x = g.scalar();
  Mat m = g.map(a, b);
  f.expect(compose(m, scalar_map(x, a, s)), compose(scalar_map(x, b, s), m), "scalar map is natural");
  f.expect(scalar_map(x, a, s), scalar_map_via_unit(x, a, s), "scalar map through the unit");
  Scalar y = g.scalar();
  f.expect(compose(scalar_map(x, a, s), scalar_map(y, a, s)), scalar_map(s.mul(x, y), a, s),
           "scalar maps compose by product");
  f.expect(add(scalar_map(x, a, s), scalar_map(y, a, s)), scalar_map(s.add(x, y), a, s),
           "scalar maps add by sum");
}

void scalar_connectives(Family& f, Sampler& g, const Semiring& s) {
  Obj a = g.obj(), b = g.obj();
  Scalar x = g.scalar();
  f.expect(scalar_map(x, unit_obj(), s), embed(x, s), "scalar map on the unit");
  f.expect(scalar_map(x, tensor_obj(a, b), s), tensor_mat(scalar_map(x, a, s), id(b, s)),
           "scalar map on a tensor, left");
  f.expect(scalar_map(x, tensor_obj(a, b), s), tensor_mat(id(a, s), scalar_map(x, b, s)),
           "scalar map on a tensor, right");
  f.expect(scalar_map(x, biproduct_obj(a, b), s), biproduct_mat(scalar_map(x, a, s), scalar_map(x, b, s)),
           "scalar map on a biproduct");
  f.expect(scalar_map(x, zero_obj(), s), id(zero_obj(), s), "scalar map on the zero object");
}

void closed(Family& f, Sampler& g, const Semiring& s) {
  Obj a = g.obj(), b = g.obj(), c = g.obj(), gam = g.obj();
  Scalar x = g.scalar();
  f.expect(hom_map(a, scalar_map(x, b, s)), scalar_map(x, hom_obj(a, b), s), "scalar map under hom");
  Mat m = g.map(tensor_obj(a, gam), b);
  f.expect(uncurry(curry(m, a, gam, b), a, gam, b), m, "uncurry after curry");
  Mat n = g.map(gam, hom_obj(a, b));
  f.expect(curry(uncurry(n, a, gam, b), a, gam, b), n, "curry after uncurry");
  Mat k = g.map(tensor_obj(gam, a), b);
  f.expect(compose(hom_map(a, k), unit_map(gam, a, s)), curry(compose(k, sigma(a, gam, s)), a, gam, b),
           "unit then post-composition is currying");
  f.expect(eval_map(a, b, s), compose(uncurry(id(hom_obj(a, b), s), a, hom_obj(a, b), b), sigma(hom_obj(a, b), a, s)),
           "evaluation is uncurried identity");
  f.expect(compose(eval_map(a, b, s), tensor_mat(curry(compose(k, sigma(a, gam, s)), a, gam, b), id(a, s))), k,
           "evaluation after curried map");
  Mat p = g.map(b, c), q = g.map(c, gam);
  f.expect(hom_map(a, compose(q, p)), compose(hom_map(a, q), hom_map(a, p)), "hom is functorial");
}

void codiag_natural(Family& f, Sampler& g, const Semiring& s) {
  Obj a = g.obj(), b = g.obj();
  Scalar p = g.scalar(), q = g.scalar();
  Mat m = g.map(a, b);
  f.expect(compose(m, weighted_codiag(p, q, a, s)), compose(weighted_codiag(p, q, b, s), biproduct_mat(m, m)),
           "weighted codiagonal is natural");
}

void codiag_distributors(Family& f, Sampler& g, const Semiring& s) {
  Obj a = g.obj(), b = g.obj();
  Scalar p = g.scalar(), q = g.scalar();
  f.expect(compose(weighted_codiag(p, q, tensor_obj(a, b), s), distribute(Distributor::D, a, a, b, s)),
           tensor_mat(weighted_codiag(p, q, a, s), id(b, s)), "weighted codiagonal through d");
  f.expect(compose(weighted_codiag(p, q, hom_obj(a, b), s), distribute(Distributor::Gamma, a, b, b, s)),
           hom_map(a, weighted_codiag(p, q, b, s)), "weighted codiagonal through gamma");
  f.expect(compose(codiag(tensor_obj(a, b), s), distribute(Distributor::D, a, a, b, s)),
           tensor_mat(codiag(a, s), id(b, s)), "codiagonal through d");
  f.expect(compose(codiag(hom_obj(a, b), s), distribute(Distributor::Gamma, a, b, b, s)),
           hom_map(a, codiag(b, s)), "codiagonal through gamma");
}

void diag_distributors(Family& f, Sampler& g, const Semiring& s) {
  Obj a = g.obj(), b = g.obj();
  f.expect(compose(distribute(Distributor::DInv, a, a, b, s), diag(tensor_obj(a, b), s)),
           tensor_mat(diag(a, s), id(b, s)), "diagonal through d_inv");
  f.expect(compose(distribute(Distributor::GammaInv, a, b, b, s), diag(hom_obj(a, b), s)),
           hom_map(a, diag(b, s)), "diagonal through gamma_inv");
}

Mat middle_swap(Obj a, Obj b, const Semiring& s) {
  return biproduct_mat(biproduct_mat(id(a, s), biproduct_swap(b, a, s)), id(b, s));
}

void codiag_biproduct(Family& f, Sampler& g, const Semiring& s) {
  Obj a = g.obj(), b = g.obj();
  Scalar p = g.scalar(), q = g.scalar();
  f.expect(compose(biproduct_mat(weighted_codiag(p, q, a, s), weighted_codiag(p, q, b, s)), middle_swap(a, b, s)),
           weighted_codiag(p, q, biproduct_obj(a, b), s), "weighted codiagonal on a biproduct");
  Mat swap_back = biproduct_mat(biproduct_mat(id(a, s), biproduct_swap(a, b, s)), id(b, s));
  f.expect(compose(swap_back, biproduct_mat(diag(a, s), diag(b, s))), diag(biproduct_obj(a, b), s),
           "diagonal on a biproduct");
}

void retraction(Family& f, Sampler& g, const Semiring& s, LawReport& report) {
  Obj a = g.obj();
  WeightPair w = g.weights();
  f.expect(compose(weighted_codiag(w, a, s), diag(a, s)), id(a, s), "weighted codiagonal retracts the diagonal");
  auto [p, q] = g.non_weights();
  ++report.control_checks;
  if (compose(weighted_codiag(p, q, a, s), diag(a, s)) != id(a, s)) ++report.control_rejections;
}

void codiag_delta(Family& f, Sampler& g, const Semiring& s) {
  Obj a = g.obj(), c = g.obj();
  WeightPair w = g.weights();
  f.expect(compose(weighted_codiag(w, biproduct_obj(a, c), s), distribute(Distributor::Delta, a, a, c, s)),
           biproduct_mat(weighted_codiag(w, a, s), id(c, s)), "weighted codiagonal through delta");
}

void diag_delta(Family& f, Sampler& g, const Semiring& s) {
  Obj a = g.obj(), c = g.obj();
  f.expect(diag(biproduct_obj(a, c), s),
           compose(distribute(Distributor::Delta, a, a, c, s), biproduct_mat(diag(a, s), id(c, s))),
           "diagonal through delta");
}

void nested(Family& f, Sampler& g, const Semiring& s) {
  Obj a = g.obj();
  WeightPair w = g.weights();
  Scalar p2 = g.scalar(), q2 = g.scalar();
  Mat outer = weighted_codiag(p2, q2, a, s);
  f.expect(compose(outer, biproduct_mat(weighted_codiag(w, a, s), id(a, s))),
           compose(weighted_codiag(w, a, s),
                   compose(biproduct_mat(outer, outer), distribute(Distributor::Delta, a, a, a, s))),
           "nested weighted codiagonals");
}

}  // namespace

std::string_view law_family_name(int id) {
  if (id < 1 || id > kLawFamilyCount) throw std::out_of_range("law family id");
  return kNames[static_cast<std::size_t>(id - 1)];
}

bool LawReport::all_pass() const {
  if (families.size() != static_cast<std::size_t>(kLawFamilyCount)) return false;
  for (const auto& f : families) {
    if (!f.passed()) return false;
  }
  return control_ok();
}

LawReport check_laws(const LawOptions& opts, const Semiring& s) {
  LawReport report;
  for (int i = 1; i <= kLawFamilyCount; ++i) {
    LawFamilyResult r;
    r.id = i;
    r.name = std::string(law_family_name(i));
    report.families.push_back(std::move(r));
  }
  Sampler g(opts.seed, opts.max_dim, s);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    auto fam = [&](int id) { return Family(report.families[static_cast<std::size_t>(id - 1)]); };
    Family f1 = fam(1), f2 = fam(2), f3 = fam(3), f4 = fam(4), f5 = fam(5), f6 = fam(6), f7 = fam(7);
    Family f8 = fam(8), f9 = fam(9), f10 = fam(10), f11 = fam(11), f12 = fam(12), f13 = fam(13), f14 = fam(14);
    monoidal(f1, g, s);
    biproducts(f2, g, s);
    distributor_inverses(f3, g, s);
    scalar_naturality(f4, g, s);
    scalar_connectives(f5, g, s);
    closed(f6, g, s);
    codiag_natural(f7, g, s);
    codiag_distributors(f8, g, s);
    diag_distributors(f9, g, s);
    codiag_biproduct(f10, g, s);
    retraction(f11, g, s, report);
    codiag_delta(f12, g, s);
    diag_delta(f13, g, s);
    nested(f14, g, s);
  }
  return report;
}

}  // namespace supcalc::model
