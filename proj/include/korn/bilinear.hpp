#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "korn/linalg.hpp"

namespace korn {

// Coefficient tensor of a bilinear map f: R^m x R^d -> R^k,
// f(x, y)_l = x^T coeffs[l] y.
struct BilinearMapSpec {
  std::string name;
  int m = 0;
  int d = 0;
  int k = 0;
  std::vector<Matrix> coeffs;  // k matrices of size m x d
};

// Real polynomial multiplication R^m x R^d -> R^{m+d-1}.
BilinearMapSpec polymult_map(int m, int d);

// Complex polynomial multiplication on R^d ~ C^{d/2}; output R^{2d-2}.
// Requires even d.
BilinearMapSpec cpolymult_map(int d);

BilinearMapSpec complex_map();     // (2,2,2)
BilinearMapSpec quaternion_map();  // (4,4,4), Cayley-Dickson from C
BilinearMapSpec octonion_map();    // (8,8,8), Cayley-Dickson from H

// h((x_1..x_k),(y_1..y_k))_l = sum_{i+j=l} f(x_i, y_j).
// dims: (k*m, k*d, (2k-1)*range(f)) for square inner maps.
BilinearMapSpec composite_map(const BilinearMapSpec& inner, int k);

// Name dispatcher used by the CLI: polymult, cpolymult, complex,
// quaternion, octonion.
BilinearMapSpec builtin_map(const std::string& name, int m, int d);

Vector eval_map(const BilinearMapSpec& spec, const Vector& x,
                const Vector& y);

// L with L vec(x (x) y) = f(x, y); vec is row-major.
Matrix induced_linear(const BilinearMapSpec& spec);

struct AdmissibleSubspaceReport {
  MatrixSubspace subspace;  // orthonormalized row space of induced_linear
  BilinearMapSpec map;
  int operator_rank = 0;
};

AdmissibleSubspaceReport admissible_subspace(const BilinearMapSpec& spec);

// Best local minimum of ||f(u,v)|| over unit-sphere pairs, by alternating
// smallest-singular-direction steps from seeded random starts. A value
// bounded away from 0 is numerical evidence of nonsingularity.
double nonsingularity_margin(const BilinearMapSpec& spec, int multistarts,
                             std::uint64_t seed);

}  // namespace korn
