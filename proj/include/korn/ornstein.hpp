#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

namespace korn {

using Rational = boost::multiprecision::cpp_rational;

// Exact rational function constant on the dyadic partition
// {T_1, ..., T_n, I_n} of [0,1], where I_k = [0, 2^-k] and
// T_k = I_k^c intersect I_{k-1}. The pieces have measures
// 2^-1, ..., 2^-n, 2^-n.
struct PiecewiseDyadic {
  int depth = 0;
  std::vector<Rational> on_t;  // value on T_k at index k-1
  Rational on_i;               // value on I_n

  // measure-weighted L1 norm
  Rational l1_norm() const;
};

// The doubling martingale f (df_n = 2^{n-1}(2 chi_{I_n} - chi_{I_{n-1}}))
// and its alternating +-1 transform g (dg_n = (-1)^{n-1} df_n), evaluated
// exactly by direct recursion.
std::pair<PiecewiseDyadic, PiecewiseDyadic> ornstein_pair(int n);

// Closed-form L1 norms (||f_n||_1, ||g_n||_1); independent of the
// recursion in ornstein_pair.
std::pair<Rational, Rational> ornstein_l1(int n);

}  // namespace korn
