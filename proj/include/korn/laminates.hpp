#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "korn/linalg.hpp"

namespace korn {

struct SplitRecord {
  int atom_index = 0;
  Matrix b;
  Matrix c;
  double t = 0.5;
};

// Finitely supported probability measure built from a Dirac mass by
// rank-one barycenter-preserving splits. Laminates constructed by split()
// carry their construction trace; hand-entered atom lists do not, and
// reject the martingale view.
class Laminate {
 public:
  // Dirac measure at root.
  explicit Laminate(Matrix root);
  // hand-entered atoms (no trace); weights must be positive and sum to 1
  Laminate(std::vector<std::pair<Matrix, double>> atoms);

  const std::vector<std::pair<Matrix, double>>& atoms() const {
    return atoms_;
  }
  int order() const { return order_; }
  MatrixShape shape() const { return shape_; }
  bool has_trace() const { return trace_root_.has_value(); }
  const Matrix& trace_root() const;
  const std::vector<SplitRecord>& trace() const { return trace_; }

 private:
  friend Laminate split(const Laminate&, int, const Matrix&, const Matrix&,
                        double);
  MatrixShape shape_;
  std::vector<std::pair<Matrix, double>> atoms_;
  int order_ = 0;
  std::optional<Matrix> trace_root_;
  std::vector<SplitRecord> trace_;
};

// Replace atom (A, w) by (B, t w), (C, (1-t) w). Requires A = tB + (1-t)C
// and rank(B - C) <= 1; violations throw with distinct messages.
Laminate split(const Laminate& lam, int atom_index, const Matrix& b,
               const Matrix& c, double t);

Matrix barycenter(const Laminate& lam);

// Martingale on the dyadic tree with rank-one increments; level i holds
// 2^i node values. Invariants (barycenter recursion + increment rank) are
// checked at construction.
class DyadicMartingale {
 public:
  DyadicMartingale(std::vector<std::vector<Matrix>> levels,
                   std::vector<std::vector<double>> split_probs);

  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<std::vector<Matrix>>& levels() const { return levels_; }
  const std::vector<std::vector<double>>& split_probs() const {
    return probs_;
  }

  // probability of reaching leaf `index` at the deepest level
  double leaf_probability(std::uint64_t index) const;

 private:
  std::vector<std::vector<Matrix>> levels_;
  std::vector<std::vector<double>> probs_;
};

// Replay a laminate's construction trace as a dyadic martingale; at each
// split, untouched leaves duplicate with probability 1/2.
DyadicMartingale to_martingale(const Laminate& lam);

// Law of the terminal value: leaves with path probabilities, equal leaf
// values merged.
Laminate from_martingale(const DyadicMartingale& mart);

// sum_i w_i (C^p ||P_X(A_i)||^p - ||Q_X(A_i)||^p)
double evaluate_f(const MatrixSubspace& x, double p, double c,
                  const Laminate& lam);

// Scalar dyadic martingale f with f(root)=0 plus a predictable sign at
// every internal node; g is the corresponding +-1 transform (g(root)=0,
// dg = sign * df). Split probabilities are uniform (t = 1/2).
class ScalarTransformPair {
 public:
  ScalarTransformPair(std::vector<std::vector<double>> f_levels,
                      std::vector<std::vector<int>> signs);

  int depth() const { return static_cast<int>(f_levels_.size()) - 1; }
  const std::vector<std::vector<double>>& f_levels() const {
    return f_levels_;
  }
  const std::vector<std::vector<double>>& g_levels() const {
    return g_levels_;
  }
  const std::vector<std::vector<int>>& signs() const { return signs_; }

 private:
  std::vector<std::vector<double>> f_levels_;
  std::vector<std::vector<double>> g_levels_;
  std::vector<std::vector<int>> signs_;
};

// M(x) = A f(x) + B g(x). Requires rank(A+B) <= 1 and rank(A-B) <= 1, so
// every increment (A +- B) df has rank at most one.
DyadicMartingale transform_embed(const Matrix& a, const Matrix& b,
                                 const ScalarTransformPair& pair);

struct BurkholderCheck {
  double f_norm = 0.0;
  double g_norm = 0.0;
  double ratio = 0.0;  // g_norm / f_norm
};

// L^p norms of the terminal values under the uniform path measure.
BurkholderCheck burkholder_check(const ScalarTransformPair& pair, double p);

// --- pair constructions used by rc_lower_search -------------------------

// Random symmetric increments and random predictable signs.
ScalarTransformPair random_pair(int depth, std::uint64_t seed);

// Spine martingale: nontrivial increments only along the all-zeros path,
// with geometric magnitudes ratio^k; sign sequence applied level-wise.
// alternate=true alternates the f increments (bounded f, growing g).
ScalarTransformPair spine_pair(int depth, double ratio, bool alternate);

// The doubling martingale with alternating transform signs (ratio 2).
ScalarTransformPair ornstein_transform_pair(int depth);

// Level-wise greedy signs on the doubling spine, maximizing the running
// L^p ratio.
ScalarTransformPair greedy_pair(int depth, double p);

struct RcLowerBound {
  double bound = 0.0;
  std::string strategy;
  BurkholderCheck check;
};

// Best ||g||_p / ||f||_p over the fixed strategy family, realized inside X
// through the built-in symmetric/antisymmetric embedding pair. A certified
// lower bound for C^rc(X, p) via the associated laminate.
RcLowerBound rc_lower_search(const MatrixSubspace& x, double p, int depth,
                             std::uint64_t seed);

}  // namespace korn
