#include "korn/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace korn {

namespace {

// binom(t, j) is odd iff the binary digits of j are a subset of those of t
// (Kummer: no carries in j + (t - j)).
bool binom_even(long t, long j) {
  if (j < 0 || j > t) return true;  // binom = 0
  return (static_cast<unsigned long>(j) &
          static_cast<unsigned long>(t - j)) != 0;
}

struct TableRow {
  long d;
  long lower;
  long upper;
};

// Best known values/bounds of N(d), d <= 33. External topology data
// (division algebras, Hopf-Stiefel, immersion bounds for RP^d; cf. the
// Adem and Dominguez-Lam tables). Starred rows are genuine ranges.
constexpr TableRow kNdTable[] = {
    {1, 1, 1},    // R is a division algebra
    {2, 2, 2},    // C
    {3, 4, 4},    // 3 o 3 = 4; polymult upper bound is not sharp here
    {4, 4, 4},    // H
    {5, 8, 8},    // 5 o 5 = 8
    {6, 8, 8},    // 6 o 6 = 8
    {7, 8, 8},    // 7 o 7 = 8
    {8, 8, 8},    // O
    {9, 16, 16},  // Imm(RP^8) + 1 = 2^4
    {10, 16, 16},
    {11, 17, 17},
    {12, 17, 17},
    {13, 19, 19},
    {14, 23, 23},
    {15, 23, 23},
    {16, 23, 23},
    {17, 32, 32},  // Imm(RP^16) + 1 = 2^5
    {18, 32, 32},
    {19, 33, 33},
    {20, 33, 35},  // * open
    {21, 35, 35},
    {22, 39, 39},
    {23, 39, 39},
    {24, 39, 39},
    {25, 40, 47},  // * open
    {26, 42, 48},  // * open
    {27, 46, 49},  // * open
    {28, 46, 50},  // * open
    {29, 47, 51},  // * open
    {30, 47, 54},  // * open
    {31, 47, 54},  // * open
    {32, 54, 54},
    {33, 64, 64},  // = 2 * 33 - 2, attained at d = 2^n + 1
};

constexpr long kTableMax = 33;

}  // namespace

long hopf_stiefel(long m, long d) {
  if (m < 1 || d < 1)
    throw std::invalid_argument("hopf_stiefel: arguments must be >= 1");
  for (long t = 1;; ++t) {
    bool ok = true;
    for (long j = std::max(t - m + 1, 0L); j < d && j <= t; ++j) {
      if (!binom_even(t, j)) {
        ok = false;
        break;
      }
    }
    if (ok) return t;  // t = m + d - 1 always succeeds (empty range)
  }
}

long tau(unsigned long a, unsigned long b) {
  return std::popcount(a & ~b);
}

bool dyadically_disjoint(unsigned long a, unsigned long b) {
  return (a & b) == 0;
}

BoundsInterval nd_bounds(long d) {
  if (d < 1) throw std::invalid_argument("nd_bounds: d must be >= 1");
  if (d <= kTableMax) {
    const TableRow& row = kNdTable[d - 1];
    return {row.lower, row.upper, row.lower == row.upper};
  }
  // N is non-decreasing, so the last table row floors the lower bound.
  const long lower =
      std::max(hopf_stiefel(d, d), kNdTable[kTableMax - 1].lower);
  long upper = 2 * d - 2;
  // N(k d') <= (2k - 1) N(d') over all factorizations with d' in the table
  for (long dp = 2; dp <= kTableMax; ++dp) {
    if (d % dp != 0) continue;
    const long k = d / dp;
    upper = std::min(upper, (2 * k - 1) * kNdTable[dp - 1].upper);
  }
  return {lower, upper, lower == upper};
}

long nprime(long m, long d) {
  if (m < 1 || d < 1)
    throw std::invalid_argument("nprime: arguments must be >= 1");
  return m + d - 1;
}

BoundsInterval nmd_bounds(long m, long d) {
  if (m < 1 || d < 1)
    throw std::invalid_argument("nmd_bounds: arguments must be >= 1");
  long lower = std::max({m, d, hopf_stiefel(m, d)});
  long upper = dyadically_disjoint(static_cast<unsigned long>(m - 1),
                                   static_cast<unsigned long>(d - 1))
                   ? m + d - 1
                   : m + d - 2;
  if (m == d) {
    const BoundsInterval square = nd_bounds(d);
    lower = std::max(lower, square.lower);
    upper = std::min(upper, square.upper);
  }
  return {lower, upper, lower == upper};
}

BoundsInterval h_bounds(long d) {
  if (d < 1) throw std::invalid_argument("h_bounds: d must be >= 1");
  const long half = (d * d + 1) / 2;
  if (d % 2 == 0) return {half, half, true};
  return {half, half + 1, false};
}

}  // namespace korn
