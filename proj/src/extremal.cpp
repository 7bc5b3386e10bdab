#include "korn/extremal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "korn/rng.hpp"

namespace korn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double alignment_value(const MatrixSubspace& x, const Vector& u,
                       const Vector& v) {
  double g = 0.0;
  for (const Matrix& b : x.basis()) {
    const double c = u.dot(b * v);
    g += c * c;
  }
  return g;
}

struct LocalMin {
  double value = kInf;
  Vector u, v;
  bool converged = false;
};

// Alternating minimization of v^T S_u v / u^T S_v u; each half-step takes
// the eigenvector of the smallest eigenvalue, so the objective never
// increases.
LocalMin alternate_from(const MatrixSubspace& x, Vector u,
                        const OptimizerOptions& opts) {
  const int m = x.shape().rows, d = x.shape().cols;
  LocalMin res;
  Vector v = Vector::Zero(d);
  double prev = kInf;
  for (int iter = 0; iter < opts.max_alternations; ++iter) {
    Matrix sv = Matrix::Zero(d, d);
    for (const Matrix& b : x.basis()) {
      const Vector w = b.transpose() * u;
      sv += w * w.transpose();
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es_v(sv);
    v = es_v.eigenvectors().col(0);
    Matrix su = Matrix::Zero(m, m);
    for (const Matrix& b : x.basis()) {
      const Vector w = b * v;
      su += w * w.transpose();
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es_u(su);
    u = es_u.eigenvectors().col(0);
    const double value = es_u.eigenvalues()(0);
    if (std::abs(prev - value) < opts.convergence_tol) {
      res.converged = true;
      prev = value;
      break;
    }
    prev = value;
  }
  res.value = alignment_value(x, u, v);
  res.u = u;
  res.v = v;
  return res;
}

// all {-1,0,1}^m directions, first nonzero entry positive
std::vector<Vector> grid_starts(int m) {
  std::vector<Vector> starts;
  std::vector<int> digits(m, 0);
  const long total = static_cast<long>(std::pow(3.0, m));
  for (long code = 1; code < total; ++code) {
    long c = code;
    Vector u(m);
    for (int i = 0; i < m; ++i) {
      u(i) = static_cast<double>(c % 3 - 1);
      c /= 3;
    }
    int first = 0;
    while (first < m && u(first) == 0.0) ++first;
    if (first == m || u(first) < 0) continue;
    starts.push_back(u / u.norm());
  }
  return starts;
}

ExtremalReport finish_report(double best, Vector u, Vector v, int starts,
                             bool converged, double threshold) {
  ExtremalReport rep;
  rep.alignment = best;
  rep.witness = {std::move(u), std::move(v)};
  rep.starts_used = starts;
  rep.converged = converged;
  rep.constant =
      best > threshold ? std::sqrt((1.0 - best) / best) : kInf;
  // clamp float noise at the fully-aligned end
  if (best >= 1.0) rep.constant = 0.0;
  return rep;
}

}  // namespace

ExtremalReport min_rank_one_alignment(const MatrixSubspace& x,
                                      const OptimizerOptions& opts) {
  const int m = x.shape().rows, d = x.shape().cols;
  if (x.dim() == 0) {
    return finish_report(0.0, Vector::Unit(m, 0), Vector::Unit(d, 0), 0,
                         true, opts.admissibility_threshold);
  }
  std::vector<Vector> starts;
  for (int s = 0; s < opts.multistarts; ++s) {
    std::mt19937_64 rng(mix_seed(opts.seed, s));
    starts.push_back(random_unit_vector(m, rng));
  }
  if (m <= 4 && d <= 4)
    for (Vector& g : grid_starts(m)) starts.push_back(std::move(g));

  LocalMin best;
  for (const Vector& u0 : starts) {
    LocalMin local = alternate_from(x, u0, opts);
    if (local.value < best.value) best = local;
  }
  return finish_report(best.value, best.u, best.v,
                       static_cast<int>(starts.size()), best.converged,
                       opts.admissibility_threshold);
}

ExtremalReport korn_constant(const MatrixSubspace& x,
                             const OptimizerOptions& opts) {
  return min_rank_one_alignment(x, opts);
}

double rc_constant_upper(const MatrixSubspace& x, double p,
                         const OptimizerOptions& opts) {
  if (p <= 1.0 || !std::isfinite(p))
    throw std::invalid_argument("rc_constant_upper: p must be in (1, inf)");
  const double pstar = std::max(p, p / (p - 1.0));
  return korn_constant(x, opts).constant * (pstar - 1.0);
}

std::pair<double, double> expectation_check(const MatrixSubspace& x,
                                            int samples,
                                            std::uint64_t seed) {
  if (x.shape().rows != x.shape().cols)
    throw std::invalid_argument("expectation_check: square ambient required");
  if (samples < 1)
    throw std::invalid_argument("expectation_check: samples must be >= 1");
  const int d = x.shape().rows;
  std::mt19937_64 rng(seed);
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Vector u = random_unit_vector(d, rng);
    const Vector v = random_unit_vector(d, rng);
    const double g = alignment_value(x, u, v);
    sum += g;
    sumsq += g * g;
  }
  const double mean = sum / samples;
  const double var =
      samples > 1 ? std::max(0.0, (sumsq - samples * mean * mean) /
                                      (samples - 1))
                  : 0.0;
  return {mean, std::sqrt(var / samples)};
}

double dimension_lower_bound(int dim_x, int d) {
  if (dim_x < 1 || dim_x > d * d)
    throw std::invalid_argument("dimension_lower_bound: bad dimension");
  return std::sqrt(static_cast<double>(d) * d / dim_x - 1.0);
}

Vector star_convolution(const Vector& u, const Vector& v) {
  const int m = static_cast<int>(u.size()), d = static_cast<int>(v.size());
  Vector out = Vector::Zero(m + d - 1);
  for (int s = 0; s < m + d - 1; ++s) {
    double acc = 0.0;
    int len = 0;
    for (int i = 0; i < m; ++i) {
      const int j = s - i;
      if (j >= 0 && j < d) {
        acc += u(i) * v(j);
        ++len;
      }
    }
    out(s) = acc / std::sqrt(static_cast<double>(len));
  }
  return out;
}

namespace {

// S with ||u * v||^2 = v^T S v for fixed u (rows are the scaled
// skew-diagonal slices of u).
Matrix star_gram(const Vector& u, int d) {
  const int m = static_cast<int>(u.size());
  Matrix s = Matrix::Zero(d, d);
  for (int diag = 0; diag < m + d - 1; ++diag) {
    Vector w = Vector::Zero(d);
    int len = 0;
    for (int j = 0; j < d; ++j) {
      const int i = diag - j;
      if (i >= 0 && i < m) {
        w(j) = u(i);
        ++len;
      }
    }
    w /= std::sqrt(static_cast<double>(len));
    s += w * w.transpose();
  }
  return s;
}

LocalMin alternate_star(Vector u, int d, const OptimizerOptions& opts) {
  LocalMin res;
  Vector v = Vector::Zero(d);
  double prev = kInf;
  for (int iter = 0; iter < opts.max_alternations; ++iter) {
    Eigen::SelfAdjointEigenSolver<Matrix> es_v(star_gram(u, d));
    v = es_v.eigenvectors().col(0);
    Eigen::SelfAdjointEigenSolver<Matrix> es_u(star_gram(v, d));
    u = es_u.eigenvectors().col(0);
    const double value = es_u.eigenvalues()(0);
    if (std::abs(prev - value) < opts.convergence_tol) {
      res.converged = true;
      prev = value;
      break;
    }
    prev = value;
  }
  res.u = u;
  res.v = v;
  res.value = star_convolution(u, v).squaredNorm();
  return res;
}

Vector binomial_start(int d) {
  Vector u(d);
  double c = 1.0;
  for (int i = 0; i < d; ++i) {
    u(i) = c;
    c = c * (d - 1 - i) / (i + 1);
  }
  return u / u.norm();
}

ExtremalReport hankel_constant_impl(int d, const OptimizerOptions& opts,
                                    const std::vector<Vector>& warm) {
  std::vector<Vector> starts = warm;
  starts.push_back(binomial_start(d));
  for (int s = 0; s < opts.multistarts; ++s) {
    std::mt19937_64 rng(mix_seed(opts.seed, s));
    starts.push_back(random_unit_vector(d, rng));
  }
  LocalMin best;
  for (const Vector& u0 : starts) {
    LocalMin local = alternate_star(u0, d, opts);
    if (local.value < best.value) best = local;
  }
  return finish_report(best.value, best.u, best.v,
                       static_cast<int>(starts.size()), best.converged,
                       opts.admissibility_threshold);
}

}  // namespace

ExtremalReport hankel_constant(int d, const OptimizerOptions& opts) {
  if (d < 1) throw std::invalid_argument("hankel_constant: d must be >= 1");
  return hankel_constant_impl(d, opts, {});
}

CatalanScanResult catalan_scan(int d_min, int d_max,
                               const OptimizerOptions& opts) {
  if (d_min < 1 || d_max < d_min)
    throw std::invalid_argument("catalan_scan: bad range");
  CatalanScanResult result;
  std::vector<Vector> warm;
  for (int d = d_min; d <= d_max; ++d) {
    const ExtremalReport rep = hankel_constant_impl(d, opts, warm);
    result.rows.push_back(
        {d, rep.constant, std::log(rep.constant), rep.converged});
    // a minimizing pair for d embeds into d + 1 zero-padded
    warm.clear();
    Vector padded = Vector::Zero(d + 1);
    padded.head(d) = rep.witness.u;
    warm.push_back(padded);
  }
  const int n = static_cast<int>(result.rows.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& row : result.rows) {
    sx += row.d;
    sy += row.log_constant;
    sxx += static_cast<double>(row.d) * row.d;
    sxy += row.d * row.log_constant;
  }
  const double denom = n * sxx - sx * sx;
  result.slope = denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
  return result;
}

}  // namespace korn
