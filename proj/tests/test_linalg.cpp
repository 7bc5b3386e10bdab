#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "korn/linalg.hpp"
#include "korn/rng.hpp"

using korn::Matrix;
using korn::MatrixShape;
using korn::MatrixSubspace;
using korn::Vector;

TEST_CASE("orthonormalize drops dependent vectors and orthonormalizes") {
  std::mt19937_64 rng(7);
  std::vector<Matrix> span;
  for (int i = 0; i < 3; ++i) span.push_back(korn::gaussian_matrix(3, 3, rng));
  span.push_back(span[0] + 2.0 * span[1]);  // dependent
  span.push_back(0.0 * span[0]);            // zero

  int dropped = 0;
  const MatrixSubspace sub =
      korn::orthonormalize(span, MatrixShape{3, 3}, &dropped);
  const std::vector<Matrix>& basis = sub.basis();
  CHECK(dropped == 2);
  REQUIRE(basis.size() == 3);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const double g = (basis[i].array() * basis[j].array()).sum();
      CHECK(g == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(0).scale(1e-12));
    }
}

TEST_CASE("named subspace dimensions") {
  for (int d = 2; d <= 6; ++d) {
    CHECK(korn::named_subspace("sym", d).dim() == d * (d + 1) / 2);
    CHECK(korn::named_subspace("sym0", d).dim() == d * (d + 1) / 2 - 1);
    CHECK(korn::named_subspace("skew", d).dim() == d * (d - 1) / 2);
    CHECK(korn::named_subspace("hankel", d).dim() == 2 * d - 1);
    CHECK(korn::named_subspace("diag", d).dim() == d);
    CHECK(korn::named_subspace("full", d).dim() == d * d);
    if (d % 2 == 0)
      CHECK(korn::named_subspace("block_complex", d).dim() == d * d / 2);
  }
  CHECK_THROWS(korn::named_subspace("block_complex", 3));
  CHECK_THROWS(korn::named_subspace("nosuch", 3));
}

TEST_CASE("projection and complement decompose the identity") {
  std::mt19937_64 rng(11);
  const MatrixSubspace x = korn::named_subspace("sym0", 4);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = korn::gaussian_matrix(4, 4, rng);
    const Matrix p = x.project(a);
    const Matrix q = x.complement(a);
    CHECK((p + q - a).norm() == doctest::Approx(0.0).scale(1e-12));
    // P is idempotent and orthogonal to Q
    CHECK((x.project(p) - p).norm() == doctest::Approx(0.0).scale(1e-12));
    CHECK((p.array() * q.array()).sum() ==
          doctest::Approx(0.0).scale(1e-11));
  }
}

TEST_CASE("subspace_equal distinguishes spaces and ignores basis choice") {
  const MatrixSubspace sym = korn::named_subspace("sym", 3);
  const MatrixSubspace skew = korn::named_subspace("skew", 3);
  CHECK(korn::subspace_equal(sym, sym, 1e-10));
  CHECK_FALSE(korn::subspace_equal(sym, skew, 1e-10));

  // same space from a rotated spanning set
  std::mt19937_64 rng(3);
  std::vector<Matrix> span;
  for (const Matrix& b : sym.basis())
    span.push_back(b + 0.3 * sym.project(korn::gaussian_matrix(3, 3, rng)));
  const MatrixSubspace again = korn::orthonormalize(span, MatrixShape{3, 3});
  CHECK(korn::subspace_equal(sym, again, 1e-10));
}

TEST_CASE("hankel(2) coincides with sym(2)") {
  CHECK(korn::subspace_equal(korn::named_subspace("hankel", 2),
                             korn::named_subspace("sym", 2), 1e-12));
}

TEST_CASE("numerical_rank") {
  std::mt19937_64 rng(5);
  const Vector u = korn::random_unit_vector(4, rng);
  const Vector v = korn::random_unit_vector(4, rng);
  CHECK(korn::numerical_rank(korn::rank_one(u, v), 1e-9) == 1);
  CHECK(korn::numerical_rank(Matrix::Identity(4, 4), 1e-9) == 4);
  CHECK(korn::numerical_rank(Matrix::Zero(4, 4), 1e-9) == 0);
}

TEST_CASE("MatrixSubspace rejects a non-orthonormal basis") {
  std::vector<Matrix> bad{Matrix::Identity(2, 2)};  // norm sqrt(2)
  CHECK_THROWS(MatrixSubspace(MatrixShape{2, 2}, bad));
}
