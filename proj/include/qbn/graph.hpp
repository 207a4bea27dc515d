#pragma once

#include <qbn/spec.hpp>

#include <vector>

namespace qbn {

// Simple undirected graph; adjacency lists are kept sorted ascending.
struct Graph {
  long n = 0;
  std::vector<std::vector<int>> adj;

  bool has_edge(int u, int v) const;
  long edge_count() const;
};

// Builds the 2m-vertex graph of any buildable spec: vertex i is x_i and
// vertex m+i is y_i. Throws SpecError on degenerate connection sets.
Graph build_graph(const BicirculantSpec& s);

// Circulant on n vertices: i adjacent to i +- s for every s in conn.
Graph build_circulant(long n, const std::vector<long>& conn);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

}  // namespace qbn
