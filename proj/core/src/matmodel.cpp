#include "supcalc/matmodel.hpp"

#include "supcalc/error.hpp"

#include <stdexcept>

namespace supcalc::model {

namespace {

[[noreturn]] void mismatch(const std::string& op, const Mat& a, const Mat& b) {
  throw ShapeMismatch(op + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                      std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

}  // namespace

Mat::Mat(std::size_t rows, std::size_t cols, const Semiring& s)
    : rows_(rows), cols_(cols), e_(rows * cols, s.zero()), s_(&s) {}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries, const Semiring& s)
    : rows_(rows), cols_(cols), e_(std::move(entries)), s_(&s) {
  if (e_.size() != rows * cols) {
    throw ShapeMismatch("matrix of shape " + std::to_string(rows) + "x" + std::to_string(cols) + " given " +
                        std::to_string(e_.size()) + " entries");
  }
}

std::string Mat::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ' ';
      out += at(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    if (a.e_[i] != b.e_[i]) return false;
  }
  return true;
}

Mat identity(Obj a, const Semiring& s) {
  Mat m(a.dim, a.dim, s);
  for (std::size_t i = 0; i < a.dim; ++i) m.set(i, i, s.one());
  return m;
}

Mat zero_mat(Obj a, Obj b, const Semiring& s) { return Mat(b.dim, a.dim, s); }

Mat embed(const Scalar& x, const Semiring& s) { return Mat(1, 1, {x}, s); }

Mat compose(const Mat& g, const Mat& f) {
  if (g.cols() != f.rows()) mismatch("compose", g, f);
  const Semiring& s = g.semiring();
  std::vector<std::vector<std::size_t>> nonzero(f.rows());
  for (std::size_t k = 0; k < f.rows(); ++k) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (!f.at(k, j).is_zero()) nonzero[k].push_back(j);
    }
  }
  Mat out(g.rows(), f.cols(), s);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t k = 0; k < g.cols(); ++k) {
      const Scalar& gik = g.at(i, k);
      if (gik.is_zero()) continue;
      for (auto j : nonzero[k]) out.set(i, j, s.add(out.at(i, j), s.mul(gik, f.at(k, j))));
    }
  }
  return out;
}

Mat add(const Mat& f, const Mat& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols()) mismatch("add", f, g);
  std::vector<Scalar> e;
  e.reserve(f.entries().size());
  for (std::size_t i = 0; i < f.entries().size(); ++i) e.push_back(f.semiring().add(f.entries()[i], g.entries()[i]));
  return Mat(f.rows(), f.cols(), std::move(e), f.semiring());
}

Mat scale(const Scalar& x, const Mat& f) {
  std::vector<Scalar> e;
  e.reserve(f.entries().size());
  for (const auto& v : f.entries()) e.push_back(f.semiring().mul(x, v));
  return Mat(f.rows(), f.cols(), std::move(e), f.semiring());
}

Obj tensor_obj(Obj a, Obj b) { return Obj{a.dim * b.dim}; }

Mat tensor_mat(const Mat& f, const Mat& g) {
  const Semiring& s = f.semiring();
  Mat out(f.rows() * g.rows(), f.cols() * g.cols(), s);
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const Scalar& fij = f.at(i, j);
      if (fij.is_zero()) continue;
      for (std::size_t k = 0; k < g.rows(); ++k) {
        for (std::size_t l = 0; l < g.cols(); ++l) {
          const Scalar& gkl = g.at(k, l);
          if (gkl.is_zero()) continue;
          out.set(i * g.rows() + k, j * g.cols() + l, s.mul(fij, gkl));
        }
      }
    }
  }
  return out;
}

Obj biproduct_obj(Obj a, Obj b) { return Obj{a.dim + b.dim}; }

Mat biproduct_mat(const Mat& f, const Mat& g) {
  Mat out(f.rows() + g.rows(), f.cols() + g.cols(), f.semiring());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) out.set(i, j, f.at(i, j));
  }
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) out.set(f.rows() + i, f.cols() + j, g.at(i, j));
  }
  return out;
}

Mat inj1(Obj a, Obj b, const Semiring& s) {
  Mat m(a.dim + b.dim, a.dim, s);
  for (std::size_t i = 0; i < a.dim; ++i) m.set(i, i, s.one());
  return m;
}

Mat inj2(Obj a, Obj b, const Semiring& s) {
  Mat m(a.dim + b.dim, b.dim, s);
  for (std::size_t i = 0; i < b.dim; ++i) m.set(a.dim + i, i, s.one());
  return m;
}

Mat proj1(Obj a, Obj b, const Semiring& s) {
  Mat m(a.dim, a.dim + b.dim, s);
  for (std::size_t i = 0; i < a.dim; ++i) m.set(i, i, s.one());
  return m;
}

Mat proj2(Obj a, Obj b, const Semiring& s) {
  Mat m(b.dim, a.dim + b.dim, s);
  for (std::size_t i = 0; i < b.dim; ++i) m.set(i, a.dim + i, s.one());
  return m;
}

Mat pair(const Mat& f, const Mat& g) {
  if (f.cols() != g.cols()) mismatch("pair", f, g);
  Mat out(f.rows() + g.rows(), f.cols(), f.semiring());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) out.set(i, j, f.at(i, j));
  }
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) out.set(f.rows() + i, j, g.at(i, j));
  }
  return out;
}

Mat copair(const Mat& f, const Mat& g) {
  if (f.rows() != g.rows()) mismatch("copair", f, g);
  Mat out(f.rows(), f.cols() + g.cols(), f.semiring());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) out.set(i, j, f.at(i, j));
    for (std::size_t j = 0; j < g.cols(); ++j) out.set(i, f.cols() + j, g.at(i, j));
  }
  return out;
}

Mat diag(Obj a, const Semiring& s) { return pair(identity(a, s), identity(a, s)); }
Mat codiag(Obj a, const Semiring& s) { return copair(identity(a, s), identity(a, s)); }

Obj hom_obj(Obj a, Obj b) { return Obj{a.dim * b.dim}; }

Mat hom_map(Obj a, const Mat& g) { return tensor_mat(g, identity(a, g.semiring())); }

Mat curry(const Mat& f, Obj x, Obj y, Obj z) {
  if (f.rows() != z.dim || f.cols() != x.dim * y.dim) {
    throw ShapeMismatch("curry: map is not X (*) Y -> Z for the given objects");
  }
  Mat out(z.dim * x.dim, y.dim, f.semiring());
  for (std::size_t zi = 0; zi < z.dim; ++zi) {
    for (std::size_t xi = 0; xi < x.dim; ++xi) {
      for (std::size_t yi = 0; yi < y.dim; ++yi) out.set(zi * x.dim + xi, yi, f.at(zi, xi * y.dim + yi));
    }
  }
  return out;
}

Mat uncurry(const Mat& g, Obj x, Obj y, Obj z) {
  if (g.rows() != z.dim * x.dim || g.cols() != y.dim) {
    throw ShapeMismatch("uncurry: map is not Y -> hom(X, Z) for the given objects");
  }
  Mat out(z.dim, x.dim * y.dim, g.semiring());
  for (std::size_t zi = 0; zi < z.dim; ++zi) {
    for (std::size_t xi = 0; xi < x.dim; ++xi) {
      for (std::size_t yi = 0; yi < y.dim; ++yi) out.set(zi, xi * y.dim + yi, g.at(zi * x.dim + xi, yi));
    }
  }
  return out;
}

Mat eval_map(Obj a, Obj b, const Semiring& s) {
  Mat m(b.dim, b.dim * a.dim * a.dim, s);
  for (std::size_t i = 0; i < b.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) m.set(i, (i * a.dim + j) * a.dim + j, s.one());
  }
  return m;
}

Mat unit_map(Obj g, Obj a, const Semiring& s) {
  Mat m(g.dim * a.dim * a.dim, g.dim, s);
  for (std::size_t gi = 0; gi < g.dim; ++gi) {
    for (std::size_t ai = 0; ai < a.dim; ++ai) m.set((gi * a.dim + ai) * a.dim + ai, gi, s.one());
  }
  return m;
}

Mat sigma(Obj a, Obj b, const Semiring& s) {
  Mat m(a.dim * b.dim, a.dim * b.dim, s);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < b.dim; ++j) m.set(j * a.dim + i, i * b.dim + j, s.one());
  }
  return m;
}

Mat coherence(Coherence kind, const std::vector<Obj>& objs, const Semiring& s) {
  auto need = [&](std::size_t n) {
    if (objs.size() != n) throw std::invalid_argument("coherence map given the wrong number of objects");
  };
  switch (kind) {
    case Coherence::Sigma: need(2); return sigma(objs[0], objs[1], s);
    case Coherence::Alpha:
    case Coherence::AlphaInv: need(3); return identity(Obj{objs[0].dim * objs[1].dim * objs[2].dim}, s);
    case Coherence::LambdaU:
    case Coherence::LambdaInv:
    case Coherence::RhoU:
    case Coherence::RhoInv: need(1); return identity(objs[0], s);
  }
  throw std::invalid_argument("unknown coherence map");
}

Mat biproduct_swap(Obj a, Obj b, const Semiring& s) {
  Mat m(a.dim + b.dim, a.dim + b.dim, s);
  for (std::size_t i = 0; i < a.dim; ++i) m.set(b.dim + i, i, s.one());
  for (std::size_t j = 0; j < b.dim; ++j) m.set(j, a.dim + j, s.one());
  return m;
}

Mat scalar_map(const Scalar& x, Obj a, const Semiring& s) { return scale(x, identity(a, s)); }

Mat scalar_map_via_unit(const Scalar& x, Obj a, const Semiring& s) {
  Mat rho = coherence(Coherence::RhoU, {a}, s);
  Mat rho_inv = coherence(Coherence::RhoInv, {a}, s);
  return compose(rho, compose(tensor_mat(identity(a, s), embed(x, s)), rho_inv));
}

Mat weighted_codiag(const Scalar& p, const Scalar& q, Obj a, const Semiring& s) {
  return copair(scalar_map(p, a, s), scalar_map(q, a, s));
}

Mat weighted_codiag(const WeightPair& w, Obj a, const Semiring& s) { return weighted_codiag(w.p(), w.q(), a, s); }

Mat distribute(Distributor kind, Obj a, Obj b, Obj c, const Semiring& s) {
  switch (kind) {
    case Distributor::D:
      return pair(tensor_mat(proj1(a, b, s), identity(c, s)), tensor_mat(proj2(a, b, s), identity(c, s)));
    case Distributor::DInv:
      return copair(tensor_mat(inj1(a, b, s), identity(c, s)), tensor_mat(inj2(a, b, s), identity(c, s)));
    case Distributor::Gamma: return pair(hom_map(a, proj1(b, c, s)), hom_map(a, proj2(b, c, s)));
    case Distributor::GammaInv: return copair(hom_map(a, inj1(b, c, s)), hom_map(a, inj2(b, c, s)));
    case Distributor::Delta: {
      Mat dup = biproduct_mat(identity(biproduct_obj(a, b), s), diag(c, s));
      Mat swap = biproduct_mat(biproduct_mat(identity(a, s), biproduct_swap(b, c, s)), identity(c, s));
      return compose(swap, dup);
    }
  }
  throw std::invalid_argument("unknown distributor");
}

}  // namespace supcalc::model
