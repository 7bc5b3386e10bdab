#include "korn/bilinear.hpp"

#include <cmath>
#include <stdexcept>

#include "korn/rng.hpp"

namespace korn {

namespace {

// Cayley-Dickson product on R^n (n a power of two): conjugation negates
// all but the first coordinate, (a,b)(c,d) = (ac - d*b, da + bc*).
Vector cd_conj(const Vector& x) {
  Vector out = -x;
  out(0) = x(0);
  return out;
}

Vector cd_mul(const Vector& x, const Vector& y) {
  const int n = static_cast<int>(x.size());
  if (n == 1) return x(0) * y;
  const int h = n / 2;
  const Vector a = x.head(h), b = x.tail(h);
  const Vector c = y.head(h), d = y.tail(h);
  Vector out(n);
  out.head(h) = cd_mul(a, c) - cd_mul(cd_conj(d), b);
  out.tail(h) = cd_mul(d, a) + cd_mul(b, cd_conj(c));
  return out;
}

BilinearMapSpec from_evaluator(std::string name, int m, int d, int k,
                               Vector (*f)(const Vector&, const Vector&)) {
  BilinearMapSpec spec{std::move(name), m, d, k, {}};
  spec.coeffs.assign(k, Matrix::Zero(m, d));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < d; ++j) {
      Vector x = Vector::Zero(m), y = Vector::Zero(d);
      x(i) = 1.0;
      y(j) = 1.0;
      const Vector out = f(x, y);
      for (int l = 0; l < k; ++l) spec.coeffs[l](i, j) = out(l);
    }
  return spec;
}

BilinearMapSpec cayley_dickson_map(std::string name, int n) {
  BilinearMapSpec spec{std::move(name), n, n, n, {}};
  spec.coeffs.assign(n, Matrix::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector x = Vector::Zero(n), y = Vector::Zero(n);
      x(i) = 1.0;
      y(j) = 1.0;
      const Vector out = cd_mul(x, y);
      for (int l = 0; l < n; ++l) spec.coeffs[l](i, j) = out(l);
    }
  return spec;
}

}  // namespace

BilinearMapSpec polymult_map(int m, int d) {
  if (m < 1 || d < 1)
    throw std::invalid_argument("polymult_map: dims must be >= 1");
  BilinearMapSpec spec{"polymult", m, d, m + d - 1, {}};
  spec.coeffs.assign(spec.k, Matrix::Zero(m, d));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < d; ++j) spec.coeffs[i + j](i, j) = 1.0;
  return spec;
}

BilinearMapSpec cpolymult_map(int d) {
  if (d < 2 || d % 2 != 0)
    throw std::invalid_argument("cpolymult_map: d must be even and >= 2");
  const int h = d / 2;  // complex degree-(h-1) polynomials
  BilinearMapSpec spec{"cpolymult", d, d, 2 * d - 2, {}};
  spec.coeffs.assign(spec.k, Matrix::Zero(d, d));
  // coefficient t of x is x_{2t} + i x_{2t+1}; product coefficient s:
  //   Re += a_t a_u - b_t b_u, Im += a_t b_u + b_t a_u over t + u = s
  for (int t = 0; t < h; ++t)
    for (int u = 0; u < h; ++u) {
      const int s = t + u;
      spec.coeffs[2 * s](2 * t, 2 * u) += 1.0;
      spec.coeffs[2 * s](2 * t + 1, 2 * u + 1) -= 1.0;
      spec.coeffs[2 * s + 1](2 * t, 2 * u + 1) += 1.0;
      spec.coeffs[2 * s + 1](2 * t + 1, 2 * u) += 1.0;
    }
  return spec;
}

BilinearMapSpec complex_map() { return cayley_dickson_map("complex", 2); }
BilinearMapSpec quaternion_map() {
  return cayley_dickson_map("quaternion", 4);
}
BilinearMapSpec octonion_map() { return cayley_dickson_map("octonion", 8); }

BilinearMapSpec composite_map(const BilinearMapSpec& inner, int k) {
  if (k < 1) throw std::invalid_argument("composite_map: k must be >= 1");
  BilinearMapSpec spec{"composite(" + inner.name + ")", k * inner.m,
                       k * inner.d, (2 * k - 1) * inner.k, {}};
  spec.coeffs.assign(spec.k, Matrix::Zero(spec.m, spec.d));
  for (int bi = 0; bi < k; ++bi)
    for (int bj = 0; bj < k; ++bj) {
      const int bl = bi + bj;
      for (int l = 0; l < inner.k; ++l)
        spec.coeffs[bl * inner.k + l].block(bi * inner.m, bj * inner.d,
                                            inner.m, inner.d) +=
            inner.coeffs[l];
    }
  return spec;
}

BilinearMapSpec builtin_map(const std::string& name, int m, int d) {
  if (name == "polymult") return polymult_map(m, d);
  if (name == "cpolymult") return cpolymult_map(d);
  if (name == "complex") return complex_map();
  if (name == "quaternion") return quaternion_map();
  if (name == "octonion") return octonion_map();
  throw std::invalid_argument("builtin_map: unknown name '" + name + "'");
}

Vector eval_map(const BilinearMapSpec& spec, const Vector& x,
                const Vector& y) {
  if (x.size() != spec.m || y.size() != spec.d)
    throw std::invalid_argument("eval_map: dimension mismatch");
  Vector out(spec.k);
  for (int l = 0; l < spec.k; ++l) out(l) = x.dot(spec.coeffs[l] * y);
  return out;
}

Matrix induced_linear(const BilinearMapSpec& spec) {
  Matrix L(spec.k, spec.m * spec.d);
  for (int l = 0; l < spec.k; ++l)
    for (int i = 0; i < spec.m; ++i)
      for (int j = 0; j < spec.d; ++j)
        L(l, i * spec.d + j) = spec.coeffs[l](i, j);
  return L;
}

AdmissibleSubspaceReport admissible_subspace(const BilinearMapSpec& spec) {
  const Matrix L = induced_linear(spec);
  std::vector<Matrix> rows;
  rows.reserve(spec.k);
  for (int l = 0; l < spec.k; ++l) {
    Matrix r(spec.m, spec.d);
    for (int i = 0; i < spec.m; ++i)
      for (int j = 0; j < spec.d; ++j) r(i, j) = L(l, i * spec.d + j);
    rows.push_back(std::move(r));
  }
  MatrixSubspace sub = orthonormalize(rows, {spec.m, spec.d});
  const int rank = sub.dim();
  return {std::move(sub), spec, rank};
}

double nonsingularity_margin(const BilinearMapSpec& spec, int multistarts,
                             std::uint64_t seed) {
  if (multistarts < 1)
    throw std::invalid_argument("nonsingularity_margin: multistarts >= 1");
  constexpr int kMaxIter = 200;
  constexpr double kTol = 1e-13;
  double best = std::numeric_limits<double>::infinity();
  for (int start = 0; start < multistarts; ++start) {
    std::mt19937_64 rng(mix_seed(seed, start));
    Vector u = random_unit_vector(spec.m, rng);
    Vector v = random_unit_vector(spec.d, rng);
    double value = eval_map(spec, u, v).norm();
    for (int iter = 0; iter < kMaxIter; ++iter) {
      // fixed u: f(u, .) is a k x d matrix; take its least singular direction
      Matrix au(spec.k, spec.d);
      for (int l = 0; l < spec.k; ++l)
        au.row(l) = (u.transpose() * spec.coeffs[l]);
      Eigen::JacobiSVD<Matrix> svd_v(au, Eigen::ComputeFullV);
      v = svd_v.matrixV().col(spec.d - 1);
      Matrix bv(spec.k, spec.m);
      for (int l = 0; l < spec.k; ++l)
        bv.row(l) = (spec.coeffs[l] * v).transpose();
      Eigen::JacobiSVD<Matrix> svd_u(bv, Eigen::ComputeFullV);
      u = svd_u.matrixV().col(spec.m - 1);
      const double next = eval_map(spec, u, v).norm();
      if (std::abs(value - next) < kTol) {
        value = next;
        break;
      }
      value = next;
    }
    best = std::min(best, value);
  }
  return best;
}

}  // namespace korn
