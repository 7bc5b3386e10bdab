#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "korn/extremal.hpp"
#include "korn/linalg.hpp"

namespace korn {

struct ExperimentConfig {
  std::uint64_t seed = 12345;
  int trials = 50;
  OptimizerOptions optimizer;
};

// Samples of C(X) over Haar-random k-dimensional subspaces, against the
// deterministic floor sqrt(d^2/k - 1).
struct ProfileRow {
  int k = 0;
  double bound = 0.0;
  std::vector<double> samples;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
  int inadmissible_count = 0;
  int nonconverged_count = 0;
};

// Haar measure on the Grassmannian realized as the span of k iid Gaussian
// matrices, orthonormalized.
MatrixSubspace sample_grassmannian(MatrixShape ambient, int k,
                                   std::uint64_t seed);

std::vector<ProfileRow> kkd_profile(int d, const std::vector<int>& ks,
                                    const ExperimentConfig& config);

// Monte Carlo mean of the largest singular value of a d x d standard
// Gaussian matrix (the Gaussian width of the rank-one unit sphere).
// Returns (estimate, standard error).
std::pair<double, double> gaussian_width_rank_one(int d, int samples,
                                                  std::uint64_t seed);

}  // namespace korn
