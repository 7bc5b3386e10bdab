#include "korn/random_experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "korn/rng.hpp"

namespace korn {

MatrixSubspace sample_grassmannian(MatrixShape ambient, int k,
                                   std::uint64_t seed) {
  const int n = ambient.rows * ambient.cols;
  if (k < 1 || k > n)
    throw std::invalid_argument("sample_grassmannian: bad dimension");
  std::mt19937_64 rng(seed);
  std::vector<Matrix> spanning;
  spanning.reserve(k);
  for (int i = 0; i < k; ++i)
    spanning.push_back(gaussian_matrix(ambient.rows, ambient.cols, rng));
  MatrixSubspace sub = orthonormalize(spanning, ambient);
  while (sub.dim() < k) {  // measure-zero degeneracy; keep the law exact
    spanning.push_back(gaussian_matrix(ambient.rows, ambient.cols, rng));
    sub = orthonormalize(spanning, ambient);
  }
  return sub;
}

std::vector<ProfileRow> kkd_profile(int d, const std::vector<int>& ks,
                                    const ExperimentConfig& config) {
  if (config.trials < 1)
    throw std::invalid_argument("kkd_profile: trials must be >= 1");
  std::vector<ProfileRow> rows;
  for (const int k : ks) {
    if (k > d * d) throw std::invalid_argument("kkd_profile: k > d^2");
    ProfileRow row;
    row.k = k;
    row.bound = std::sqrt(static_cast<double>(d) * d / k - 1.0);
    for (int trial = 0; trial < config.trials; ++trial) {
      const std::uint64_t sub_seed =
          mix_seed(config.seed, (static_cast<std::uint64_t>(k) << 32) |
                                    static_cast<std::uint64_t>(trial));
      const MatrixSubspace x = sample_grassmannian({d, d}, k, sub_seed);
      OptimizerOptions opts = config.optimizer;
      opts.seed = mix_seed(sub_seed, 1);
      const ExtremalReport rep = korn_constant(x, opts);
      row.samples.push_back(rep.constant);
      if (!std::isfinite(rep.constant)) ++row.inadmissible_count;
      if (!rep.converged) ++row.nonconverged_count;
    }
    std::vector<double> sorted = row.samples;
    std::sort(sorted.begin(), sorted.end());
    row.min = sorted.front();
    row.max = sorted.back();
    const size_t n = sorted.size();
    row.median = (n % 2 == 1) ? sorted[n / 2]
                              : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::pair<double, double> gaussian_width_rank_one(int d, int samples,
                                                  std::uint64_t seed) {
  if (samples < 1)
    throw std::invalid_argument("gaussian_width_rank_one: samples >= 1");
  std::mt19937_64 rng(seed);
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Matrix g = gaussian_matrix(d, d, rng);
    Eigen::JacobiSVD<Matrix> svd(g);
    const double top = svd.singularValues()(0);
    sum += top;
    sumsq += top * top;
  }
  const double mean = sum / samples;
  const double var =
      samples > 1
          ? std::max(0.0, (sumsq - samples * mean * mean) / (samples - 1))
          : 0.0;
  return {mean, std::sqrt(var / samples)};
}

}  // namespace korn
