#include <qbn/graph.hpp>

#include <qbn/numbers.hpp>

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace qbn {

bool Graph::has_edge(int u, int v) const {
  const auto& row = adj[u];
  return std::binary_search(row.begin(), row.end(), v);
}

long Graph::edge_count() const {
  long deg = 0;
  for (const auto& row : adj) deg += static_cast<long>(row.size());
  return deg / 2;
}

namespace {

Graph from_edge_set(long n, const std::set<std::pair<int, int>>& edges) {
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& row : g.adj) std::sort(row.begin(), row.end());
  return g;
}

void add_edge(std::set<std::pair<int, int>>& edges, long u, long v) {
  if (u == v) return;
  if (u > v) std::swap(u, v);
  edges.emplace(static_cast<int>(u), static_cast<int>(v));
}

}  // namespace

Graph build_graph(const BicirculantSpec& s) {
  if (!is_buildable(s))
    throw SpecError("cannot build a graph from degenerate spec " + to_string(s));
  long m = s.m;
  std::vector<long> S, T, R{0};
  switch (s.tag) {
    case ClassTag::B1:
      S = {mod(s.a, m), mod(-s.a, m), m / 2};
      T = {mod(s.b, m), mod(-s.b, m), m / 2};
      break;
    case ClassTag::B2:
      S = {mod(s.a, m), mod(-s.a, m)};
      T = {mod(s.b, m), mod(-s.b, m)};
      R.push_back(mod(*s.c, m));
      break;
    case ClassTag::B3:
      S = {m / 2};
      T = {m / 2};
      R.push_back(mod(s.a, m));
      R.push_back(mod(s.b, m));
      break;
    case ClassTag::B4:
      R.push_back(mod(s.a, m));
      R.push_back(mod(s.b, m));
      R.push_back(mod(*s.c, m));
      break;
  }
  std::set<std::pair<int, int>> edges;
  for (long i = 0; i < m; ++i) {
    for (long j : S) add_edge(edges, i, mod(i + j, m));
    for (long j : T) add_edge(edges, m + i, m + mod(i + j, m));
    for (long r : R) add_edge(edges, i, m + mod(i + r, m));
  }
  Graph g = from_edge_set(2 * m, edges);
  for (const auto& row : g.adj)
    if (row.size() != 4)
      throw SpecError("spec " + to_string(s) + " does not yield a 4-regular graph");
  return g;
}

Graph build_circulant(long n, const std::vector<long>& conn) {
  if (n < 1) throw std::invalid_argument("build_circulant: order must be positive");
  std::set<std::pair<int, int>> edges;
  for (long i = 0; i < n; ++i)
    for (long s : conn) add_edge(edges, i, mod(i + s, n));
  return from_edge_set(n, edges);
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  std::vector<char> seen(g.n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  long count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        q.push(v);
      }
    }
  }
  return count == g.n;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n, -1);
  for (int start = 0; start < g.n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.adj[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace qbn
