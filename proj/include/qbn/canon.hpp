#pragma once

#include <qbn/graph.hpp>

#include <compare>
#include <cstdint>
#include <vector>

namespace qbn {

// Label-invariant encoding of a graph's isomorphism class: two graphs get
// equal certificates exactly when they are isomorphic.
struct Certificate {
  std::vector<std::uint8_t> bytes;
  auto operator<=>(const Certificate&) const = default;
};

// Canonical form via iterative color refinement with backtracking
// individualization on the first largest non-singleton cell; the
// certificate encodes the lexicographically least adjacency bit-matrix
// over all explored discrete colorings. Orders above 128 are rejected.
Certificate canonical_certificate(const Graph& g);

// True iff the automorphism group acts transitively on the vertices.
bool is_vertex_transitive(const Graph& g);

// True iff g is isomorphic to a connected quartic circulant Circ(n,{s,t}),
// 1 <= s < t < n/2 with gcd(n, s, t) = 1; decided by certificate lookup
// against a per-order table.
bool is_circulant(const Graph& g);

}  // namespace qbn
