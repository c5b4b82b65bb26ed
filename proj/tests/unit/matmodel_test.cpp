#include "supcalc/error.hpp"
#include "supcalc/laws.hpp"
#include "supcalc/matmodel.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace supcalc;
using namespace supcalc::model;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

// A 0/1 matrix given by where each basis vector of the domain goes.
Mat from_basis(std::size_t dom, std::size_t cod, const std::function<std::vector<std::size_t>(std::size_t)>& image) {
  Mat m(cod, dom);
  for (std::size_t j = 0; j < dom; ++j) {
    for (auto i : image(j)) m.set(i, j, q(1));
  }
  return m;
}

Mat random_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Mat m(rows, cols);
  std::uniform_int_distribution<long> d(0, 4);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, q(d(rng), 1 + d(rng)));
  }
  return m;
}

// Reference product over rationals, written without any of the library's
// skipping or precomputation.
Mat naive_product(const Mat& g, const Mat& f) {
  Mat out(g.rows(), f.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      Rational acc = 0;
      for (std::size_t k = 0; k < g.cols(); ++k) acc += g.at(i, k).rational() * f.at(k, j).rational();
      out.set(i, j, Scalar(acc));
    }
  }
  return out;
}

}  // namespace

TEST(Mat, ShapesAndErrors) {
  Mat m(2, 3);
  EXPECT_EQ(m.dom().dim, 3u);
  EXPECT_EQ(m.cod().dim, 2u);
  EXPECT_THROW(compose(m, m), ShapeMismatch);
  EXPECT_THROW(add(m, Mat(3, 2)), ShapeMismatch);
  EXPECT_THROW(pair(Mat(1, 2), Mat(1, 3)), ShapeMismatch);
  EXPECT_THROW(copair(Mat(1, 2), Mat(2, 2)), ShapeMismatch);
  EXPECT_THROW(Mat(2, 2, {q(1)}), ShapeMismatch);
  EXPECT_THROW(coherence(Coherence::Sigma, {Obj{1}}), std::invalid_argument);
  EXPECT_EQ(Mat(2, 2, {q(1), q(2), q(3), q(4)}).to_string(), "1 2\n3 4\n");
}

TEST(Mat, ComposeMatchesNaiveProduct) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    std::size_t a = 1 + rng() % 5, b = 1 + rng() % 5, c = 1 + rng() % 5;
    Mat f = random_mat(rng, b, a);
    Mat g = random_mat(rng, c, b);
    EXPECT_EQ(compose(g, f), naive_product(g, f));
  }
}

TEST(Mat, TensorIsKronecker) {
  Mat f(2, 1, {q(1), q(2)});
  Mat g(1, 2, {q(3), q(5)});
  EXPECT_EQ(tensor_mat(f, g), Mat(2, 2, {q(3), q(5), q(6), q(10)}));
  EXPECT_EQ(tensor_obj(Obj{2}, Obj{3}).dim, 6u);
}

TEST(Mat, Biproducts) {
  Obj a{2}, b{1};
  EXPECT_EQ(biproduct_obj(a, b).dim, 3u);
  EXPECT_EQ(compose(proj1(a, b), inj1(a, b)), identity(a));
  EXPECT_EQ(compose(proj2(a, b), inj1(a, b)), zero_mat(a, b));
  EXPECT_EQ(add(compose(inj1(a, b), proj1(a, b)), compose(inj2(a, b), proj2(a, b))), identity(Obj{3}));
  EXPECT_EQ(diag(Obj{1}), Mat(2, 1, {q(1), q(1)}));
  EXPECT_EQ(codiag(Obj{1}), Mat(1, 2, {q(1), q(1)}));
  EXPECT_EQ(weighted_codiag(q(1, 4), q(3, 4), Obj{1}), Mat(1, 2, {q(1, 4), q(3, 4)}));
  EXPECT_EQ(biproduct_swap(Obj{1}, Obj{2}), from_basis(3, 3, [](std::size_t j) {
              return std::vector<std::size_t>{j == 0 ? 2 : j - 1};
            }));
}

TEST(Mat, SymmetryFollowsPairIndexing) {
  for (std::size_t da = 1; da <= 3; ++da) {
    for (std::size_t db = 1; db <= 3; ++db) {
      Mat oracle = from_basis(da * db, da * db, [&](std::size_t j) {
        std::size_t a = j / db, b = j % db;
        return std::vector<std::size_t>{b * da + a};
      });
      EXPECT_EQ(sigma(Obj{da}, Obj{db}), oracle);
      EXPECT_EQ(compose(sigma(Obj{db}, Obj{da}), sigma(Obj{da}, Obj{db})), identity(Obj{da * db}));
    }
  }
}

TEST(Mat, AssociatorsAndUnitorsAreIdentities) {
  EXPECT_EQ(coherence(Coherence::Alpha, {Obj{2}, Obj{3}, Obj{2}}), identity(Obj{12}));
  EXPECT_EQ(coherence(Coherence::LambdaU, {Obj{3}}), identity(Obj{3}));
  EXPECT_EQ(coherence(Coherence::RhoInv, {Obj{2}}), identity(Obj{2}));
}

TEST(Mat, DistributorsMoveBasisVectors) {
  for (std::size_t da = 1; da <= 2; ++da) {
    for (std::size_t db = 1; db <= 3; ++db) {
      for (std::size_t dc = 1; dc <= 2; ++dc) {
        Obj a{da}, b{db}, c{dc};
        Mat d = from_basis((da + db) * dc, da * dc + db * dc, [&](std::size_t j) {
          std::size_t i = j / dc, k = j % dc;
          return std::vector<std::size_t>{i < da ? i * dc + k : da * dc + (i - da) * dc + k};
        });
        EXPECT_EQ(distribute(Distributor::D, a, b, c), d);
        EXPECT_EQ(compose(distribute(Distributor::DInv, a, b, c), d), identity(Obj{(da + db) * dc}));

        Mat gamma = from_basis((db + dc) * da, db * da + dc * da, [&](std::size_t j) {
          std::size_t i = j / da, k = j % da;
          return std::vector<std::size_t>{i < db ? i * da + k : db * da + (i - db) * da + k};
        });
        EXPECT_EQ(distribute(Distributor::Gamma, a, b, c), gamma);
        EXPECT_EQ(compose(distribute(Distributor::GammaInv, a, b, c), gamma), identity(Obj{(db + dc) * da}));

        Mat delta = from_basis(da + db + dc, da + dc + db + dc, [&](std::size_t j) {
          if (j < da) return std::vector<std::size_t>{j};
          if (j < da + db) return std::vector<std::size_t>{da + dc + (j - da)};
          std::size_t k = j - da - db;
          return std::vector<std::size_t>{da + k, da + dc + db + k};
        });
        EXPECT_EQ(distribute(Distributor::Delta, a, b, c), delta);
      }
    }
  }
  // (a, b, c) goes to (a, c, b, c)
  Mat v(3, 1, {q(1), q(2), q(3)});
  EXPECT_EQ(compose(distribute(Distributor::Delta, Obj{1}, Obj{1}, Obj{1}), v), Mat(4, 1, {q(1), q(3), q(2), q(3)}));
}

TEST(Mat, CurryReindexes) {
  // f : X (*) Y -> Z with X = 2, Y = 1, Z = 1
  Mat f(1, 2, {q(5), q(7)});
  EXPECT_EQ(curry(f, Obj{2}, Obj{1}, Obj{1}), Mat(2, 1, {q(5), q(7)}));
  // X = 1, Y = 2, Z = 2
  Mat g(2, 2, {q(1), q(2), q(3), q(4)});
  EXPECT_EQ(curry(g, Obj{1}, Obj{2}, Obj{2}), Mat(2, 2, {q(1), q(2), q(3), q(4)}));
  EXPECT_THROW(curry(g, Obj{2}, Obj{2}, Obj{2}), ShapeMismatch);
}

TEST(MatProperty, ClosedStructure) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 40; ++i) {
    Obj x{1 + rng() % 3}, y{1 + rng() % 3}, z{1 + rng() % 3};
    Mat f = random_mat(rng, z.dim, x.dim * y.dim);
    Mat c = curry(f, x, y, z);
    EXPECT_EQ(uncurry(c, x, y, z), f);
    // f = eval . (curry f (*) Id_X) . sigma
    EXPECT_EQ(compose(eval_map(x, z), compose(tensor_mat(c, identity(x)), sigma(x, y))), f);
    // triangle: eval . (unit (*) Id) = Id
    EXPECT_EQ(compose(eval_map(y, tensor_obj(x, y)), tensor_mat(unit_map(x, y), identity(y))),
              identity(tensor_obj(x, y)));
    // hom(A, g) is post-composition
    Mat g = random_mat(rng, y.dim, z.dim);
    EXPECT_EQ(curry(compose(g, f), x, y, y), compose(hom_map(x, g), c));
  }
}

TEST(MatProperty, ScalarMapsAgree) {
  for (auto x : {q(0), q(1), q(2, 3), q(5)}) {
    for (std::size_t d = 1; d <= 4; ++d) {
      EXPECT_EQ(scalar_map(x, Obj{d}), scalar_map_via_unit(x, Obj{d}));
      EXPECT_EQ(scalar_map(x, Obj{d}), scale(x, identity(Obj{d})));
    }
  }
  EXPECT_EQ(embed(q(3)), Mat(1, 1, {q(3)}));
}

TEST(Laws, EveryFamilyHoldsOnEverySemiring) {
  LawOptions o;
  o.trials = 30;
  o.max_dim = 3;
  for (auto k : {SemiringKind::NonNegRational, SemiringKind::Rational, SemiringKind::Boolean, SemiringKind::Float}) {
    auto report = check_laws(o, semiring(k));
    ASSERT_EQ(report.families.size(), static_cast<std::size_t>(kLawFamilyCount));
    for (const auto& f : report.families) {
      EXPECT_TRUE(f.passed()) << semiring(k).name() << " " << f.name << ": " << f.first_failure;
    }
    EXPECT_TRUE(report.control_ok()) << semiring(k).name();
    EXPECT_TRUE(report.all_pass());
  }
}

TEST(Laws, FamiliesHaveDistinctNames) {
  std::set<std::string> names;
  for (int i = 1; i <= kLawFamilyCount; ++i) names.insert(std::string(law_family_name(i)));
  EXPECT_EQ(names.size(), static_cast<std::size_t>(kLawFamilyCount));
}

TEST(Laws, DeterministicPerSeed) {
  LawOptions o;
  o.trials = 5;
  o.max_dim = 2;
  auto a = check_laws(o);
  auto b = check_laws(o);
  for (std::size_t i = 0; i < a.families.size(); ++i) EXPECT_EQ(a.families[i].checks, b.families[i].checks);
}
