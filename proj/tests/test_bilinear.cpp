#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "korn/bilinear.hpp"
#include "korn/linalg.hpp"
#include "korn/rng.hpp"

using korn::BilinearMapSpec;
using korn::Matrix;
using korn::Vector;

namespace {

Vector unit(int n, int i) {
  Vector e = Vector::Zero(n);
  e(i) = 1.0;
  return e;
}

BilinearMapSpec algebra(int n) {
  if (n == 2) return korn::complex_map();
  if (n == 4) return korn::quaternion_map();
  return korn::octonion_map();
}

}  // namespace

TEST_CASE("polymult is coefficient convolution") {
  const BilinearMapSpec f = korn::polymult_map(3, 4);
  CHECK(f.m == 3);
  CHECK(f.d == 4);
  CHECK(f.k == 6);
  std::mt19937_64 rng(2);
  const Vector x = korn::gaussian_vector(3, rng);
  const Vector y = korn::gaussian_vector(4, rng);
  const Vector z = korn::eval_map(f, x, y);
  for (int s = 0; s < 6; ++s) {
    double conv = 0.0;
    for (int i = 0; i < 3; ++i)
      if (s - i >= 0 && s - i < 4) conv += x(i) * y(s - i);
    CHECK(z(s) == doctest::Approx(conv).epsilon(1e-12));
  }
}

TEST_CASE("quaternion multiplication table") {
  const BilinearMapSpec h = algebra(4);
  // i*j = k, j*i = -k, i*i = -1
  auto mul = [&](int a, int b) { return korn::eval_map(h, unit(4, a), unit(4, b)); };
  CHECK((mul(1, 2) - unit(4, 3)).norm() == doctest::Approx(0.0));
  CHECK((mul(2, 1) + unit(4, 3)).norm() == doctest::Approx(0.0));
  CHECK((mul(1, 1) + unit(4, 0)).norm() == doctest::Approx(0.0));
  CHECK((mul(0, 2) - unit(4, 2)).norm() == doctest::Approx(0.0));
  CHECK((mul(3, 1) - unit(4, 2)).norm() == doctest::Approx(0.0));
}

TEST_CASE("octonion multiplication table (full 8x8)") {
  // e_a e_b = sign * e_c; table generated once by hand from the
  // Cayley-Dickson doubling of the quaternions and frozen here.
  const BilinearMapSpec o = algebra(8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const Vector z = korn::eval_map(o, unit(8, a), unit(8, b));
      CHECK(z.norm() == doctest::Approx(1.0).epsilon(1e-12));
      // basis times basis lands on a signed basis vector
      CHECK(z.cwiseAbs().maxCoeff() == doctest::Approx(1.0).epsilon(1e-12));
      if (a == 0) CHECK((z - unit(8, b)).norm() == doctest::Approx(0.0));
      if (b == 0) CHECK((z - unit(8, a)).norm() == doctest::Approx(0.0));
      if (a == b && a > 0)
        CHECK((z + unit(8, 0)).norm() == doctest::Approx(0.0));
      if (a > 0 && b > 0 && a != b) {
        // anticommutativity off the diagonal
        const Vector w = korn::eval_map(o, unit(8, b), unit(8, a));
        CHECK((z + w).norm() == doctest::Approx(0.0).scale(1e-12));
      }
    }
  // a spot row: e1 * e_b for b = 0..7 (Cayley-Dickson convention)
  const int idx[8] = {1, 0, 3, 2, 5, 4, 7, 6};
  const double sgn[8] = {1, -1, -1, 1, -1, 1, 1, -1};
  for (int b = 0; b < 8; ++b) {
    const Vector z = korn::eval_map(o, unit(8, 1), unit(8, b));
    CHECK((z - sgn[b] * unit(8, idx[b])).norm() ==
          doctest::Approx(0.0).scale(1e-12));
  }
}

TEST_CASE("composition algebras are normed") {
  std::mt19937_64 rng(9);
  for (int n : {2, 4, 8}) {
    const BilinearMapSpec f = algebra(n);
    for (int trial = 0; trial < 20; ++trial) {
      const Vector x = korn::gaussian_vector(n, rng);
      const Vector y = korn::gaussian_vector(n, rng);
      CHECK(korn::eval_map(f, x, y).norm() ==
            doctest::Approx(x.norm() * y.norm()).epsilon(1e-10));
    }
  }
}

TEST_CASE("induced_linear matches eval_map") {
  std::mt19937_64 rng(4);
  for (const char* name : {"polymult", "complex", "quaternion"}) {
    const BilinearMapSpec f = korn::builtin_map(name, 3, 4);
    const Matrix l = korn::induced_linear(f);
    const Vector x = korn::gaussian_vector(f.m, rng);
    const Vector y = korn::gaussian_vector(f.d, rng);
    Vector vec(f.m * f.d);
    for (int i = 0; i < f.m; ++i)
      for (int j = 0; j < f.d; ++j) vec(i * f.d + j) = x(i) * y(j);
    CHECK((l * vec - korn::eval_map(f, x, y)).norm() ==
          doctest::Approx(0.0).scale(1e-10));
  }
}

TEST_CASE("polymult row space is the Hankel space") {
  for (int d = 2; d <= 6; ++d) {
    const auto rep = korn::admissible_subspace(korn::polymult_map(d, d));
    CHECK(rep.operator_rank == 2 * d - 1);
    CHECK(korn::subspace_equal(rep.subspace, korn::named_subspace("hankel", d),
                               1e-10));
  }
}

TEST_CASE("cpolymult dimensions and nonsingularity") {
  const BilinearMapSpec f = korn::cpolymult_map(6);
  CHECK(f.m == 6);
  CHECK(f.d == 6);
  CHECK(f.k == 10);  // 2 * (2 * 3 - 1)
  CHECK_THROWS(korn::cpolymult_map(5));
  CHECK(korn::nonsingularity_margin(f, 16, 12345) > 1e-3);
}

TEST_CASE("composite dimensions") {
  const BilinearMapSpec inner = algebra(2);
  const BilinearMapSpec h = korn::composite_map(inner, 3);
  CHECK(h.m == 6);
  CHECK(h.d == 6);
  CHECK(h.k == 10);  // (2k-1) * g
  // block structure: h((x,0,0),(y,0,0)) = (f(x,y), 0, ...)
  std::mt19937_64 rng(8);
  Vector x = Vector::Zero(6), y = Vector::Zero(6);
  x.head(2) = korn::gaussian_vector(2, rng);
  y.head(2) = korn::gaussian_vector(2, rng);
  const Vector z = korn::eval_map(h, x, y);
  const Vector z0 = korn::eval_map(inner, x.head(2), y.head(2));
  CHECK((z.head(2) - z0).norm() == doctest::Approx(0.0).scale(1e-12));
  CHECK(z.tail(8).norm() == doctest::Approx(0.0).scale(1e-12));
}

TEST_CASE("nonsingularity margin of normed maps is one") {
  for (const char* name : {"complex", "quaternion"}) {
    const BilinearMapSpec f = korn::builtin_map(name, 0, 0);
    CHECK(korn::nonsingularity_margin(f, 16, 12345) ==
          doctest::Approx(1.0).epsilon(1e-8));
  }
}
