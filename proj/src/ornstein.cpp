#include "korn/ornstein.hpp"

#include <stdexcept>

namespace korn {

namespace {

Rational pow2(int k) {
  Rational r = 1;
  if (k >= 0)
    r = Rational(boost::multiprecision::cpp_int(1) << k);
  else
    r = Rational(1, boost::multiprecision::cpp_int(1) << (-k));
  return r;
}

}  // namespace

Rational PiecewiseDyadic::l1_norm() const {
  Rational total = 0;
  for (int k = 1; k <= depth; ++k)
    total += abs(on_t[k - 1]) * pow2(-k);
  total += abs(on_i) * pow2(-depth);
  return total;
}

std::pair<PiecewiseDyadic, PiecewiseDyadic> ornstein_pair(int n) {
  if (n < 1) throw std::invalid_argument("ornstein_pair: n must be >= 1");
  PiecewiseDyadic f{n, {}, 0}, g{n, {}, 0};
  Rational f_i = 0, g_i = 0;  // running values on I_{k-1}
  for (int k = 1; k <= n; ++k) {
    const Rational df = pow2(k - 1);
    const int sign = (k % 2 == 1) ? 1 : -1;  // (-1)^{k-1}
    // on T_k the increment is -df, on I_k it is +df
    f.on_t.push_back(f_i - df);
    g.on_t.push_back(g_i - sign * df);
    f_i += df;
    g_i += sign * df;
  }
  f.on_i = f_i;
  g.on_i = g_i;
  return {std::move(f), std::move(g)};
}

std::pair<Rational, Rational> ornstein_l1(int n) {
  if (n < 1) throw std::invalid_argument("ornstein_l1: n must be >= 1");
  // ||f_n||_1 = 2 - 2^{1-n}: every T_k carries -1, I_n carries 2^n - 1
  const Rational f_norm = Rational(2) - pow2(1 - n);
  // ||g_n||_1 = sum_k (2^{k+1} + (-1)^k)/3 * 2^{-k} + |1 - (-2)^n|/3 * 2^{-n}
  Rational g_norm = 0;
  for (int k = 1; k <= n; ++k) {
    const int sign = (k % 2 == 0) ? 1 : -1;
    g_norm += (pow2(k + 1) + sign) / 3 * pow2(-k);
  }
  Rational tail = (Rational(1) - (n % 2 == 0 ? pow2(n) : -pow2(n))) / 3;
  g_norm += abs(tail) * pow2(-n);
  return {f_norm, g_norm};
}

}  // namespace korn
