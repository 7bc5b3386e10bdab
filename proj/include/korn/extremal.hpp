#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "korn/linalg.hpp"

namespace korn {

struct OptimizerOptions {
  int multistarts = 64;
  int max_alternations = 500;
  double convergence_tol = 1e-13;
  double admissibility_threshold = 1e-9;
  std::uint64_t seed = 12345;
};

// Result of minimizing ||P_X(u (x) v)||^2 over unit rank-one matrices.
// alignment is the best value m found; C = sqrt((1-m)/m), infinite when
// m falls below the admissibility threshold.
struct ExtremalReport {
  double alignment = 1.0;
  RankOneWitness witness;
  double constant = 0.0;
  int starts_used = 0;
  bool converged = true;
};

ExtremalReport min_rank_one_alignment(const MatrixSubspace& x,
                                      const OptimizerOptions& opts = {});

// min_rank_one_alignment with the constant filled in.
ExtremalReport korn_constant(const MatrixSubspace& x,
                             const OptimizerOptions& opts = {});

// C(X,2) * (p* - 1), p* = max(p, p/(p-1)).
double rc_constant_upper(const MatrixSubspace& x, double p,
                         const OptimizerOptions& opts = {});

// Monte Carlo estimate of E ||P_X(u (x) v)||^2 for independent uniform
// unit u, v. Returns (mean, standard error).
std::pair<double, double> expectation_check(const MatrixSubspace& x,
                                            int samples, std::uint64_t seed);

// sqrt(d^2 / dimX - 1): deterministic floor for C(X) from the expectation
// lemma.
double dimension_lower_bound(int dim_x, int d);

// Length-normalized coefficient convolution: entry s is
// (sum_{i+j=s} u_i v_j) / sqrt(len_s). Satisfies ||u * v|| = ||P_H(u(x)v)||.
Vector star_convolution(const Vector& u, const Vector& v);

// korn_constant specialized to X = hankel(d) through the convolution
// objective.
ExtremalReport hankel_constant(int d, const OptimizerOptions& opts = {});

struct CatalanScanRow {
  int d = 0;
  double constant = 0.0;
  double log_constant = 0.0;
  bool converged = true;
};

struct CatalanScanResult {
  std::vector<CatalanScanRow> rows;
  double slope = 0.0;  // least-squares slope of log C against d
};

CatalanScanResult catalan_scan(int d_min, int d_max,
                               const OptimizerOptions& opts = {});

}  // namespace korn
