#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace korn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct MatrixShape {
  int rows = 0;
  int cols = 0;

  bool operator==(const MatrixShape&) const = default;
};

// A linear subspace of M_{m,d}(R) with an orthonormal basis under the
// Frobenius inner product. Immutable after construction.
class MatrixSubspace {
 public:
  MatrixSubspace(MatrixShape shape, std::vector<Matrix> orthonormal_basis);

  const MatrixShape& shape() const { return shape_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  // P_X(A) or A - P_X(A).
  Matrix project(const Matrix& a) const;
  Matrix complement(const Matrix& a) const;

 private:
  MatrixShape shape_;
  std::vector<Matrix> basis_;
};

// Modified Gram-Schmidt with re-orthogonalization. Inputs whose residual
// after projecting out the running basis falls below 1e-10 (relative to
// their original norm) are dropped. Throws std::invalid_argument on a
// shape mismatch.
MatrixSubspace orthonormalize(const std::vector<Matrix>& spanning,
                              MatrixShape shape,
                              int* dropped_count = nullptr);

// Named square-ambient subspaces of M_d(R):
//   sym, sym0, skew, hankel, block_complex (even d), diag, full.
MatrixSubspace named_subspace(const std::string& name, int d);

// Number of singular values above tol * sigma_max; 0 for the zero matrix.
int numerical_rank(const Matrix& a, double tol);

// True iff dimensions agree and the operator distance between the two
// orthogonal projectors is below tol.
bool subspace_equal(const MatrixSubspace& x, const MatrixSubspace& y,
                    double tol);

inline Matrix rank_one(const Vector& u, const Vector& v) {
  return u * v.transpose();
}

// Unit vectors u, v representing the rank-one matrix u (x) v.
struct RankOneWitness {
  Vector u;
  Vector v;
};

}  // namespace korn
