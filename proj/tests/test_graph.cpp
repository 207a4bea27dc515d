#include <doctest.h>

#include <qbn/graph.hpp>
#include <qbn/spec.hpp>

#include <algorithm>
#include <vector>

using namespace qbn;

namespace {

// Every make_spec-canonical spec with m in [lo, hi], per class.
std::vector<BicirculantSpec> canonical_sweep(long lo, long hi) {
  std::vector<BicirculantSpec> out;
  for (long m = lo; m <= hi; ++m) {
    if (m % 2 == 0 && m >= 4) {
      for (long a = 1; 2 * a < m; ++a)
        for (long b = a; 2 * b < m; ++b) out.push_back(make_spec(ClassTag::B1, m, a, b));
      for (long a = 1; a < m; ++a)
        for (long b = a + 2; b < m; b += 2) out.push_back(make_spec(ClassTag::B3, m, a, b));
    }
    if (m >= 3) {
      for (long a = 1; 2 * a < m; ++a)
        for (long b = a; 2 * b < m; ++b)
          for (long c = 1; 2 * c <= m; ++c)
            out.push_back(make_spec(ClassTag::B2, m, a, b, c));
    }
    if (m >= 4) {
      for (long a = 1; a < m; ++a)
        for (long b = a + 1; b < m; ++b)
          for (long c = b + 1; c < m; ++c)
            out.push_back(make_spec(ClassTag::B4, m, a, b, c));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("build_graph places the advertised edges") {
  Graph g = build_graph(make_spec(ClassTag::B2, 6, 1, 2, 3));
  CHECK(g.n == 12);
  CHECK(g.edge_count() == 24);
  CHECK(g.has_edge(0, 1));    // x0 - x1
  CHECK(g.has_edge(0, 5));    // x0 - x5
  CHECK(g.has_edge(6, 8));    // y0 - y2
  CHECK(g.has_edge(6, 10));   // y0 - y4
  CHECK(g.has_edge(0, 6));    // x0 - y0
  CHECK(g.has_edge(0, 9));    // x0 - y3
  CHECK(!g.has_edge(0, 2));
  CHECK(!g.has_edge(0, 7));
  CHECK(g.has_edge(9, 0));
  CHECK(std::is_sorted(g.adj[0].begin(), g.adj[0].end()));

  Graph b1 = build_graph(make_spec(ClassTag::B1, 6, 2, 2));
  CHECK(b1.has_edge(0, 2));
  CHECK(b1.has_edge(0, 4));
  CHECK(b1.has_edge(0, 3));   // the m/2 chord
  CHECK(b1.has_edge(0, 6));   // x0 - y0
  CHECK(!b1.has_edge(0, 1));

  Graph b3 = build_graph(make_spec(ClassTag::B3, 6, 1, 3));
  CHECK(b3.has_edge(0, 3));
  CHECK(b3.has_edge(0, 6));
  CHECK(b3.has_edge(0, 7));
  CHECK(b3.has_edge(0, 9));
  CHECK(!b3.has_edge(0, 1));

  Graph b4 = build_graph(make_spec(ClassTag::B4, 5, 1, 2, 3));
  CHECK(b4.has_edge(0, 5));
  CHECK(b4.has_edge(0, 6));
  CHECK(b4.has_edge(0, 7));
  CHECK(b4.has_edge(0, 8));
  CHECK(!b4.has_edge(0, 1));
  CHECK(!b4.has_edge(0, 9));
}

TEST_CASE("build_graph rejects degenerate connection sets") {
  CHECK_THROWS_AS(build_graph({ClassTag::B2, 6, 3, 1, 1}), SpecError);
  CHECK_THROWS_AS(build_graph({ClassTag::B2, 6, 1, 1, 6}), SpecError);
  CHECK_THROWS_AS(build_graph({ClassTag::B1, 6, 3, 1}), SpecError);
}

TEST_CASE("every canonical spec builds a 4-regular graph on 2m vertices") {
  for (const auto& s : canonical_sweep(3, 8)) {
    Graph g = build_graph(s);
    CHECK(g.n == 2 * s.m);
    CHECK(g.edge_count() == 4 * s.m);
    for (const auto& row : g.adj) CHECK(static_cast<long>(row.size()) == 4);
  }
}

TEST_CASE("build_circulant matches its connection set") {
  Graph c = build_circulant(8, {1, 2});
  CHECK(c.n == 8);
  CHECK(c.has_edge(0, 1));
  CHECK(c.has_edge(0, 2));
  CHECK(c.has_edge(0, 6));
  CHECK(c.has_edge(0, 7));
  CHECK(!c.has_edge(0, 3));
  CHECK(c.edge_count() == 16);

  Graph k5 = build_circulant(5, {1, 2});
  CHECK(k5.edge_count() == 10);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) CHECK(k5.has_edge(u, v));
}

TEST_CASE("connectivity of the built graph equals the parameter test") {
  for (const auto& s : canonical_sweep(3, 10))
    CHECK(is_connected(build_graph(s)) == is_connected_params(s));
}

TEST_CASE("connectivity examples") {
  CHECK(is_connected(build_graph(make_spec(ClassTag::B2, 6, 1, 2, 3))));
  CHECK(!is_connected(build_graph(make_spec(ClassTag::B2, 8, 2, 2, 4))));
  CHECK(is_connected(build_circulant(8, {1, 2})));
  CHECK(!is_connected(build_circulant(8, {2, 4})));
}

TEST_CASE("bipartiteness") {
  CHECK(is_bipartite(build_graph(make_spec(ClassTag::B2, 4, 1, 1, 2))));
  CHECK(!is_bipartite(build_graph(make_spec(ClassTag::B2, 4, 1, 1, 1))));
  CHECK(!is_bipartite(build_graph(make_spec(ClassTag::B1, 6, 2, 2))));
  CHECK(!is_bipartite(build_circulant(5, {1, 2})));
  CHECK(is_bipartite(build_circulant(8, {1, 3})));

  for (const auto& s : canonical_sweep(4, 8))
    if (s.tag == ClassTag::B4) CHECK(is_bipartite(build_graph(s)));
}
