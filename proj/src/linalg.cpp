#include "korn/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace korn {

namespace {

constexpr double kOrthoTol = 1e-12;
constexpr double kDropTol = 1e-10;

double frobenius_dot(const Matrix& a, const Matrix& b) {
  return (a.array() * b.array()).sum();
}

}  // namespace

MatrixSubspace::MatrixSubspace(MatrixShape shape,
                               std::vector<Matrix> orthonormal_basis)
    : shape_(shape), basis_(std::move(orthonormal_basis)) {
  if (shape_.rows < 1 || shape_.cols < 1)
    throw std::invalid_argument("MatrixSubspace: shape must be positive");
  if (static_cast<int>(basis_.size()) > shape_.rows * shape_.cols)
    throw std::invalid_argument("MatrixSubspace: dim exceeds ambient");
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].rows() != shape_.rows || basis_[i].cols() != shape_.cols)
      throw std::invalid_argument("MatrixSubspace: basis shape mismatch");
    for (size_t j = 0; j <= i; ++j) {
      const double dot = frobenius_dot(basis_[i], basis_[j]);
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(dot - target) > kOrthoTol)
        throw std::invalid_argument("MatrixSubspace: basis not orthonormal");
    }
  }
}

Matrix MatrixSubspace::project(const Matrix& a) const {
  if (a.rows() != shape_.rows || a.cols() != shape_.cols)
    throw std::invalid_argument("project: shape mismatch");
  Matrix out = Matrix::Zero(shape_.rows, shape_.cols);
  for (const Matrix& b : basis_) out += frobenius_dot(b, a) * b;
  return out;
}

Matrix MatrixSubspace::complement(const Matrix& a) const {
  return a - project(a);
}

MatrixSubspace orthonormalize(const std::vector<Matrix>& spanning,
                              MatrixShape shape, int* dropped_count) {
  std::vector<Matrix> basis;
  int dropped = 0;
  for (const Matrix& input : spanning) {
    if (input.rows() != shape.rows || input.cols() != shape.cols)
      throw std::invalid_argument("orthonormalize: shape mismatch");
    const double original = input.norm();
    if (original == 0.0) {
      ++dropped;
      continue;
    }
    Matrix w = input;
    // two MGS passes
    for (int pass = 0; pass < 2; ++pass)
      for (const Matrix& b : basis) w -= frobenius_dot(b, w) * b;
    if (w.norm() < kDropTol * original) {
      ++dropped;
      continue;
    }
    basis.push_back(w / w.norm());
  }
  if (dropped_count) *dropped_count = dropped;
  return MatrixSubspace(shape, std::move(basis));
}

namespace {

Matrix unit(int d, int i, int j) {
  Matrix e = Matrix::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

std::vector<Matrix> sym_basis(int d) {
  std::vector<Matrix> basis;
  for (int i = 0; i < d; ++i) basis.push_back(unit(d, i, i));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      basis.push_back((unit(d, i, j) + unit(d, j, i)) / std::sqrt(2.0));
  return basis;
}

std::vector<Matrix> sym0_basis(int d) {
  // trace-free diagonal directions, then the off-diagonal symmetric ones
  std::vector<Matrix> spanning;
  for (int i = 1; i < d; ++i)
    spanning.push_back(unit(d, 0, 0) - unit(d, i, i));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      spanning.push_back(unit(d, i, j) + unit(d, j, i));
  return spanning;
}

std::vector<Matrix> skew_basis(int d) {
  std::vector<Matrix> basis;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      basis.push_back((unit(d, i, j) - unit(d, j, i)) / std::sqrt(2.0));
  return basis;
}

// normalized indicator of the skew-diagonal {i + j = s}
std::vector<Matrix> hankel_basis(int d) {
  std::vector<Matrix> basis;
  for (int s = 0; s <= 2 * d - 2; ++s) {
    Matrix h = Matrix::Zero(d, d);
    int len = 0;
    for (int i = 0; i < d; ++i) {
      const int j = s - i;
      if (j >= 0 && j < d) {
        h(i, j) = 1.0;
        ++len;
      }
    }
    basis.push_back(h / std::sqrt(static_cast<double>(len)));
  }
  return basis;
}

// { (A B; -B A) : A, B in M_{d/2}(R) }
std::vector<Matrix> block_complex_basis(int d) {
  const int h = d / 2;
  std::vector<Matrix> basis;
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      Matrix a = Matrix::Zero(d, d);
      a(i, j) = 1.0;
      a(h + i, h + j) = 1.0;
      basis.push_back(a / std::sqrt(2.0));
      Matrix b = Matrix::Zero(d, d);
      b(i, h + j) = 1.0;
      b(h + i, j) = -1.0;
      basis.push_back(b / std::sqrt(2.0));
    }
  return basis;
}

}  // namespace

MatrixSubspace named_subspace(const std::string& name, int d) {
  if (d < 1) throw std::invalid_argument("named_subspace: d must be >= 1");
  const MatrixShape shape{d, d};
  if (name == "sym") return MatrixSubspace(shape, sym_basis(d));
  if (name == "sym0") return orthonormalize(sym0_basis(d), shape);
  if (name == "skew") return MatrixSubspace(shape, skew_basis(d));
  if (name == "hankel") return MatrixSubspace(shape, hankel_basis(d));
  if (name == "block_complex") {
    if (d % 2 != 0)
      throw std::invalid_argument("named_subspace: block_complex needs even d");
    return MatrixSubspace(shape, block_complex_basis(d));
  }
  if (name == "diag") {
    std::vector<Matrix> basis;
    for (int i = 0; i < d; ++i) basis.push_back(unit(d, i, i));
    return MatrixSubspace(shape, std::move(basis));
  }
  if (name == "full") {
    std::vector<Matrix> basis;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) basis.push_back(unit(d, i, j));
    return MatrixSubspace(shape, std::move(basis));
  }
  throw std::invalid_argument("named_subspace: unknown name '" + name + "'");
}

int numerical_rank(const Matrix& a, double tol) {
  if (tol < 0) throw std::invalid_argument("numerical_rank: tol must be >= 0");
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++rank;
  return rank;
}

bool subspace_equal(const MatrixSubspace& x, const MatrixSubspace& y,
                    double tol) {
  if (!(x.shape() == y.shape()))
    throw std::invalid_argument("subspace_equal: shape mismatch");
  if (x.dim() != y.dim()) return false;
  const int n = x.shape().rows * x.shape().cols;
  Matrix diff = Matrix::Zero(n, n);
  for (const Matrix& b : x.basis()) {
    Eigen::Map<const Vector> v(b.data(), n);
    diff += v * v.transpose();
  }
  for (const Matrix& b : y.basis()) {
    Eigen::Map<const Vector> v(b.data(), n);
    diff -= v * v.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(diff, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff() < tol;
}

}  // namespace korn
