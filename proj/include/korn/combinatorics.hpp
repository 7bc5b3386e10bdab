#pragma once

#include <cstdint>

namespace korn {

// Integer interval [lower, upper]; exact iff the endpoints coincide.
struct BoundsInterval {
  long lower = 0;
  long upper = 0;
  bool exact = false;

  bool operator==(const BoundsInterval&) const = default;
};

// Hopf-Stiefel function m o d: the minimal t such that binom(t, j) is even
// for all j with t - m < j < d. Binomial parity via Kummer's theorem.
long hopf_stiefel(long m, long d);

// Lam's digit count: #{ i : bit i of b is 0 and bits i of a, b differ }.
long tau(unsigned long a, unsigned long b);

// No binary digit position is set in both a and b.
bool dyadically_disjoint(unsigned long a, unsigned long b);

// Best known bounds for N(d). Table data for d <= 33; composition and
// Hopf-Stiefel bounds beyond.
BoundsInterval nd_bounds(long d);

// N'(m,d) = m + d - 1 (exact, all m, d >= 1).
long nprime(long m, long d);

// Bounds for the rectangular N(m,d).
BoundsInterval nmd_bounds(long m, long d);

// Bounds for h(d) = min{ dim(X) : C(X) = 1 }; exact ceil(d^2/2) for even d.
BoundsInterval h_bounds(long d);

}  // namespace korn
