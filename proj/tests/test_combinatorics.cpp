#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "korn/combinatorics.hpp"

namespace {

// Pascal's triangle modulo 2, computed directly; independent of the
// Kummer-based parity in the library.
std::vector<std::vector<int>> pascal_mod2(int rows) {
  std::vector<std::vector<int>> p(rows);
  for (int t = 0; t < rows; ++t) {
    p[t].assign(t + 1, 1);
    for (int j = 1; j < t; ++j) p[t][j] = (p[t - 1][j - 1] + p[t - 1][j]) % 2;
  }
  return p;
}

long hopf_stiefel_brute(long m, long d,
                        const std::vector<std::vector<int>>& p) {
  for (long t = 1;; ++t) {
    bool all_even = true;
    for (long j = t - m + 1; j < d; ++j) {
      if (j < 0 || j > t) continue;
      if (p[t][j] == 1) all_even = false;
    }
    if (all_even) return t;
  }
}

}  // namespace

TEST_CASE("hopf_stiefel against Pascal-mod-2 brute force") {
  const auto p = pascal_mod2(64);
  for (long m = 1; m <= 16; ++m)
    for (long d = 1; d <= 16; ++d)
      CHECK(korn::hopf_stiefel(m, d) == hopf_stiefel_brute(m, d, p));
}

TEST_CASE("hopf_stiefel landmark values") {
  CHECK(korn::hopf_stiefel(1, 7) == 7);
  CHECK(korn::hopf_stiefel(2, 2) == 2);
  CHECK(korn::hopf_stiefel(3, 3) == 4);
  CHECK(korn::hopf_stiefel(5, 5) == 8);
  CHECK(korn::hopf_stiefel(9, 9) == 16);
  CHECK(korn::hopf_stiefel(17, 17) == 32);
  CHECK(korn::hopf_stiefel(2, 3) == 4);
}

TEST_CASE("tau and dyadic disjointness") {
  // tau(a, b) = #{i : bit i of b is 0, bit i of a is 1}
  CHECK(korn::tau(0b1010, 0b0110) == 1);
  CHECK(korn::tau(0b1111, 0b0000) == 4);
  CHECK(korn::tau(5, 5) == 0);
  CHECK(korn::dyadically_disjoint(0b1010, 0b0101));
  CHECK_FALSE(korn::dyadically_disjoint(0b1010, 0b0010));
}

TEST_CASE("nd_bounds table rows") {
  struct Row {
    long d, lower, upper;
  };
  const Row rows[] = {{1, 1, 1},   {2, 2, 2},   {3, 4, 4},   {4, 4, 4},
                      {5, 8, 8},   {6, 8, 8},   {7, 8, 8},   {8, 8, 8},
                      {9, 16, 16}, {13, 19, 19}, {16, 23, 23}, {17, 32, 32},
                      {20, 33, 35}, {25, 40, 47}, {32, 54, 54}, {33, 64, 64}};
  for (const Row& r : rows) {
    const korn::BoundsInterval b = korn::nd_bounds(r.d);
    CHECK(b.lower == r.lower);
    CHECK(b.upper == r.upper);
    CHECK(b.exact == (r.lower == r.upper));
  }
}

TEST_CASE("nd_bounds beyond the table stays consistent") {
  for (long d = 34; d <= 80; ++d) {
    const korn::BoundsInterval b = korn::nd_bounds(d);
    CHECK(b.lower >= d);
    CHECK(b.lower <= b.upper);
    CHECK(b.upper <= 2 * d - 1);
    CHECK(b.lower >= korn::hopf_stiefel(d, d));
  }
}

TEST_CASE("nprime is exactly m + d - 1") {
  for (long m = 1; m <= 10; ++m)
    for (long d = 1; d <= 10; ++d) CHECK(korn::nprime(m, d) == m + d - 1);
}

TEST_CASE("nmd_bounds sandwich and known values") {
  for (long m = 1; m <= 12; ++m)
    for (long d = 1; d <= 12; ++d) {
      const korn::BoundsInterval b = korn::nmd_bounds(m, d);
      CHECK(b.lower >= std::max({m, d, korn::hopf_stiefel(m, d)}));
      CHECK(b.lower <= b.upper);
      CHECK(b.upper <= m + d - 1);
    }
  // dyadically disjoint m-1, d-1 : upper bound m + d - 1 is attained
  CHECK(korn::nmd_bounds(1, 8).lower == 8);
  CHECK(korn::nmd_bounds(1, 8).upper == 8);
  CHECK(korn::nmd_bounds(2, 2) == korn::nd_bounds(2));
  CHECK(korn::nmd_bounds(3, 3) == korn::nd_bounds(3));
}

TEST_CASE("h_bounds") {
  for (long d = 2; d <= 20; d += 2) {
    const korn::BoundsInterval b = korn::h_bounds(d);
    CHECK(b.exact);
    CHECK(b.lower == d * d / 2);
    CHECK(b.upper == d * d / 2);
  }
  for (long d = 3; d <= 19; d += 2) {
    const korn::BoundsInterval b = korn::h_bounds(d);
    CHECK_FALSE(b.exact);
    CHECK(b.lower == (d * d + 1) / 2);
    CHECK(b.upper == b.lower + 1);
  }
}
