#pragma once

#include <iosfwd>
#include <string>

#include "korn/laminates.hpp"
#include "korn/linalg.hpp"

namespace korn {

struct SubspaceLoadResult {
  MatrixSubspace subspace;
  int dropped = 0;  // dependent spanning vectors removed on load
};

// Subspace document: { "shape": [m, d], "basis": [[row-major floats],..] }.
// The basis is orthonormalized on load.
SubspaceLoadResult load_subspace(std::istream& in);
SubspaceLoadResult load_subspace_file(const std::string& path);
void save_subspace(std::ostream& out, const MatrixSubspace& subspace);

// Laminate trace document:
//   { "shape": [m, d], "root": [row-major floats],
//     "splits": [{"atom": i, "B": [...], "C": [...], "t": 0.5}, ...] }
Laminate load_laminate_trace(std::istream& in);
Laminate load_laminate_trace_file(const std::string& path);

}  // namespace korn
