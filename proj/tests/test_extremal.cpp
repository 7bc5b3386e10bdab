#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "korn/extremal.hpp"
#include "korn/linalg.hpp"
#include "korn/rng.hpp"

using korn::ExtremalReport;
using korn::Matrix;
using korn::MatrixSubspace;
using korn::OptimizerOptions;
using korn::Vector;

TEST_CASE("symmetric part: alignment 1/2, constant 1") {
  // closed form: ||P_sym(u (x) v)||^2 = (1 + <u,v>^2) / 2, minimum 1/2
  for (int d = 2; d <= 4; ++d) {
    const ExtremalReport rep =
        korn::korn_constant(korn::named_subspace("sym", d));
    CHECK(rep.alignment == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(rep.constant == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(rep.converged);
    // witness is orthogonal: <u, v> = 0 at the minimum
    CHECK(std::abs(rep.witness.u.dot(rep.witness.v)) < 1e-5);
  }
}

TEST_CASE("closed form for sym holds pointwise") {
  std::mt19937_64 rng(21);
  const MatrixSubspace sym = korn::named_subspace("sym", 5);
  for (int trial = 0; trial < 30; ++trial) {
    const Vector u = korn::random_unit_vector(5, rng);
    const Vector v = korn::random_unit_vector(5, rng);
    const double val = sym.project(korn::rank_one(u, v)).squaredNorm();
    const double s = u.dot(v);
    CHECK(val == doctest::Approx((1.0 + s * s) / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("traceless symmetric part") {
  // ||P_sym0(u (x) v)||^2 = 1/2 + s^2 (1/2 - 1/d), minimized at s = 0
  std::mt19937_64 rng(22);
  const int d = 4;
  const MatrixSubspace sym0 = korn::named_subspace("sym0", d);
  for (int trial = 0; trial < 30; ++trial) {
    const Vector u = korn::random_unit_vector(d, rng);
    const Vector v = korn::random_unit_vector(d, rng);
    const double val = sym0.project(korn::rank_one(u, v)).squaredNorm();
    const double s = u.dot(v);
    CHECK(val ==
          doctest::Approx(0.5 + s * s * (0.5 - 1.0 / d)).epsilon(1e-11));
  }
  const ExtremalReport rep = korn::korn_constant(sym0);
  CHECK(rep.constant == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("skew part is inadmissible") {
  const ExtremalReport rep =
      korn::korn_constant(korn::named_subspace("skew", 3));
  CHECK(rep.alignment < 1e-9);
  CHECK(std::isinf(rep.constant));
}

TEST_CASE("full space has constant zero") {
  const ExtremalReport rep =
      korn::korn_constant(korn::named_subspace("full", 3));
  CHECK(rep.alignment == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.constant == doctest::Approx(0.0).scale(1e-8));
}

TEST_CASE("block complex d=2 against an angle-grid oracle") {
  const MatrixSubspace x = korn::named_subspace("block_complex", 2);
  // brute force over u = (cos a, sin a), v = (cos b, sin b)
  double best = 2.0;
  const int n = 2000;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double a = M_PI * i / n, b = M_PI * j / n;
      Vector u(2), v(2);
      u << std::cos(a), std::sin(a);
      v << std::cos(b), std::sin(b);
      best = std::min(best, x.project(korn::rank_one(u, v)).squaredNorm());
    }
  const ExtremalReport rep = korn::korn_constant(x);
  CHECK(rep.alignment == doctest::Approx(best).epsilon(1e-6));
  CHECK(rep.alignment == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(rep.constant == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("consistency C^2 m = 1 - m") {
  for (const char* name : {"sym", "hankel", "diag"}) {
    const ExtremalReport rep =
        korn::korn_constant(korn::named_subspace(name, 3));
    CHECK(rep.constant * rep.constant * rep.alignment ==
          doctest::Approx(1.0 - rep.alignment).epsilon(1e-9));
  }
}

TEST_CASE("rc upper bound collapses to C at p = 2") {
  const MatrixSubspace sym = korn::named_subspace("sym", 3);
  const double c = korn::korn_constant(sym).constant;
  CHECK(korn::rc_constant_upper(sym, 2.0) == doctest::Approx(c).epsilon(1e-9));
  CHECK(korn::rc_constant_upper(sym, 4.0) ==
        doctest::Approx(3.0 * c).epsilon(1e-9));
  CHECK(korn::rc_constant_upper(sym, 4.0 / 3.0) ==
        doctest::Approx(3.0 * c).epsilon(1e-9));
}

TEST_CASE("star convolution agrees with the Hankel projection norm") {
  std::mt19937_64 rng(17);
  const int d = 5;
  const MatrixSubspace h = korn::named_subspace("hankel", d);
  for (int trial = 0; trial < 20; ++trial) {
    const Vector u = korn::random_unit_vector(d, rng);
    const Vector v = korn::random_unit_vector(d, rng);
    CHECK(korn::star_convolution(u, v).squaredNorm() ==
          doctest::Approx(h.project(korn::rank_one(u, v)).squaredNorm())
              .epsilon(1e-11));
  }
}

TEST_CASE("hankel constants") {
  const ExtremalReport h2 = korn::hankel_constant(2);
  CHECK(h2.constant == doctest::Approx(1.0).epsilon(1e-6));
  for (int d = 2; d <= 6; ++d) {
    const ExtremalReport rep = korn::hankel_constant(d);
    CHECK(rep.converged);
    // dimension floor sqrt(d^2 / (2d-1) - 1)
    const double floor = korn::dimension_lower_bound(2 * d - 1, d);
    CHECK(rep.constant >= floor - 1e-8);
    // against the generic optimizer on the same space
    const ExtremalReport generic =
        korn::korn_constant(korn::named_subspace("hankel", d));
    CHECK(rep.constant == doctest::Approx(generic.constant).epsilon(1e-5));
  }
}

TEST_CASE("dimension_lower_bound") {
  CHECK(korn::dimension_lower_bound(9, 3) == doctest::Approx(0.0));
  CHECK(korn::dimension_lower_bound(3, 3) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("expectation lemma Monte Carlo") {
  const MatrixSubspace sym = korn::named_subspace("sym", 3);
  const auto [mean, se] = korn::expectation_check(sym, 50000, 777);
  CHECK(std::abs(mean - 6.0 / 9.0) < 3.0 * se);
  CHECK(se < 0.01);
}

TEST_CASE("catalan scan slope over a short range") {
  OptimizerOptions opts;
  opts.multistarts = 24;
  const korn::CatalanScanResult scan = korn::catalan_scan(3, 8, opts);
  REQUIRE(scan.rows.size() == 6);
  for (std::size_t i = 1; i < scan.rows.size(); ++i)
    CHECK(scan.rows[i].constant > scan.rows[i - 1].constant);
  CHECK(scan.slope > 0.3);
  CHECK(scan.slope < 0.9);
}
