#pragma once

#include <qbn/graph.hpp>
#include <qbn/numbers.hpp>

#include <vector>

namespace qbn {

// Dense integer matrix, row-major.
struct IntMatrix {
  long rows = 0;
  long cols = 0;
  std::vector<Int> data;

  static IntMatrix zero(long rows, long cols);
  Int& at(long r, long c) { return data[r * cols + c]; }
  const Int& at(long r, long c) const { return data[r * cols + c]; }
};

IntMatrix adjacency_matrix(const Graph& g);

// Exact basis of the rational null space. Vectors are indexed by free
// column in ascending order and scaled so the first nonzero entry is +1.
struct KernelBasis {
  long dim = 0;
  long rank = 0;
  std::vector<std::vector<Rat>> vectors;
};

// Fraction-free (Bareiss) elimination over the integers followed by exact
// rational back-substitution; deterministic for a fixed input.
KernelBasis kernel_basis(const IntMatrix& a);

// True iff the adjacency kernel has dimension exactly 1 and its basis
// vector has no zero entry.
bool nut_oracle(const Graph& g);

}  // namespace qbn
