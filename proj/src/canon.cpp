#include <qbn/canon.hpp>

#include <qbn/numbers.hpp>

#include <algorithm>
#include <bitset>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace qbn {

namespace {

constexpr int kOrderCap = 128;
constexpr long kLeafCap = 2000000;
constexpr std::size_t kGenCap = 65536;

struct Dsu {
  std::vector<int> parent;

  explicit Dsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

// Backtracking canonical-form search over colorings: refine until stable,
// split the first largest non-singleton cell on every member in turn, and
// keep the lexicographically least adjacency bit-matrix over the discrete
// colorings reached. Equal-matrix leaves yield automorphisms; at every tree
// node, candidates lying in one orbit of the automorphisms that fix all
// vertices individualized so far are explored only once.
struct Canon {
  const Graph& g;
  int n;
  std::vector<std::bitset<kOrderCap>> adjbit;
  std::vector<std::uint8_t> best;
  std::vector<int> best_at;  // position -> vertex for the best leaf
  bool have_best = false;
  Dsu orbits;
  std::vector<std::vector<int>> gens;
  std::vector<int> base;  // vertices individualized along the current path
  long leaf_count = 0;

  explicit Canon(const Graph& gg) : g(gg), n(static_cast<int>(gg.n)), orbits(n) {
    adjbit.assign(n, {});
    for (int u = 0; u < n; ++u)
      for (int v : g.adj[u]) adjbit[u].set(v);
  }

  static int color_count(const std::vector<int>& col) {
    int k = 0;
    for (int c : col) k = std::max(k, c + 1);
    return k;
  }

  // Stable 1-WL refinement; new color ids are signature ranks, so they do
  // not depend on the input vertex labeling.
  void refine(std::vector<int>& col) const {
    for (;;) {
      int k = color_count(col);
      std::vector<std::pair<std::vector<int>, int>> sig(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> s;
        s.reserve(g.adj[v].size() + 1);
        s.push_back(col[v]);
        for (int u : g.adj[v]) s.push_back(col[u]);
        std::sort(s.begin() + 1, s.end());
        sig[v] = {std::move(s), v};
      }
      std::sort(sig.begin(), sig.end());
      int rank = -1;
      std::vector<int> next(n);
      for (int i = 0; i < n; ++i) {
        if (i == 0 || sig[i].first != sig[i - 1].first) ++rank;
        next[sig[i].second] = rank;
      }
      col = std::move(next);
      if (rank + 1 == k) return;
    }
  }

  std::vector<int> individualize(const std::vector<int>& col, int v) const {
    std::vector<int> out(n);
    int cv = col[v];
    for (int u = 0; u < n; ++u)
      out[u] = col[u] + (col[u] > cv ? 1 : 0) + (col[u] == cv && u != v ? 1 : 0);
    return out;
  }

  // First largest non-singleton cell, or -1 when the coloring is discrete.
  static int target_cell(const std::vector<int>& col) {
    int k = color_count(col);
    std::vector<int> cnt(k, 0);
    for (int c : col) ++cnt[c];
    int cell = -1, size = 1;
    for (int c = 0; c < k; ++c) {
      if (cnt[c] > size) {
        size = cnt[c];
        cell = c;
      }
    }
    return cell;
  }

  void leaf(const std::vector<int>& col) {
    if (++leaf_count > kLeafCap)
      throw std::logic_error("canonical_certificate: search explosion");
    std::vector<int> at(n);
    for (int v = 0; v < n; ++v) at[col[v]] = v;
    std::vector<std::uint8_t> bits((static_cast<long>(n) * (n - 1) / 2 + 7) / 8, 0);
    long k = 0;
    for (int i = 0; i < n; ++i) {
      const auto& row = adjbit[at[i]];
      for (int j = i + 1; j < n; ++j, ++k)
        if (row[at[j]]) bits[k >> 3] |= static_cast<std::uint8_t>(0x80u >> (k & 7));
    }
    if (!have_best || bits < best) {
      best = std::move(bits);
      best_at = std::move(at);
      have_best = true;
    } else if (bits == best) {
      std::vector<int> phi(n);
      bool identity = true;
      for (int v = 0; v < n; ++v) {
        phi[v] = best_at[col[v]];
        if (phi[v] != v) identity = false;
      }
      if (identity) return;
      for (int v = 0; v < n; ++v) orbits.unite(v, phi[v]);
      if (gens.size() < kGenCap) gens.push_back(std::move(phi));
    }
  }

  bool fixes_base(const std::vector<int>& p) const {
    for (int b : base)
      if (p[b] != b) return false;
    return true;
  }

  void dfs(const std::vector<int>& col) {
    int tc = target_cell(col);
    if (tc < 0) {
      leaf(col);
      return;
    }
    Dsu local(n);
    std::size_t applied = 0;
    std::vector<int> explored;
    for (int v = 0; v < n; ++v) {
      if (col[v] != tc) continue;
      for (; applied < gens.size(); ++applied) {
        const auto& p = gens[applied];
        if (!fixes_base(p)) continue;
        for (int w = 0; w < n; ++w) local.unite(w, p[w]);
      }
      bool covered = false;
      for (int u : explored) {
        if (local.find(u) == local.find(v)) {
          covered = true;
          break;
        }
      }
      if (covered) continue;
      explored.push_back(v);
      base.push_back(v);
      std::vector<int> child = individualize(col, v);
      refine(child);
      dfs(child);
      base.pop_back();
    }
  }

  void run(std::vector<int> col0) {
    refine(col0);
    dfs(col0);
  }
};

void check_cap(const Graph& g) {
  if (g.n > kOrderCap)
    throw std::invalid_argument("canonical labeling: order above cap 128");
}

Certificate pack_certificate(int n, const std::vector<std::uint8_t>& bits) {
  Certificate cert;
  cert.bytes.reserve(2 + bits.size());
  cert.bytes.push_back(static_cast<std::uint8_t>(n >> 8));
  cert.bytes.push_back(static_cast<std::uint8_t>(n & 0xff));
  cert.bytes.insert(cert.bytes.end(), bits.begin(), bits.end());
  return cert;
}

// Certificate of the graph with one vertex given a distinguished color;
// equal marked certificates prove an automorphism between the marks.
Certificate marked_certificate(const Graph& g, int v) {
  Canon c(g);
  std::vector<int> seed(g.n, 1);
  seed[v] = 0;
  c.run(std::move(seed));
  return pack_certificate(static_cast<int>(g.n), c.best);
}

}  // namespace

Certificate canonical_certificate(const Graph& g) {
  check_cap(g);
  Canon c(g);
  c.run(std::vector<int>(g.n, 0));
  return pack_certificate(static_cast<int>(g.n), c.best);
}

bool is_vertex_transitive(const Graph& g) {
  check_cap(g);
  if (g.n <= 1) return true;
  for (const auto& row : g.adj)
    if (row.size() != g.adj[0].size()) return false;
  Canon c(g);
  c.run(std::vector<int>(g.n, 0));

  std::vector<int> reps;
  for (int v = 0; v < g.n; ++v)
    if (c.orbits.find(v) == v) reps.push_back(v);
  if (reps.size() == 1) return true;

  Certificate cert0 = marked_certificate(g, 0);
  for (int r : reps) {
    if (r == c.orbits.find(0)) continue;
    if (!(marked_certificate(g, r) == cert0)) return false;
  }
  return true;
}

bool is_circulant(const Graph& g) {
  check_cap(g);
  long n = g.n;
  Certificate cert = canonical_certificate(g);

  static std::mutex mu;
  static std::map<long, std::set<Certificate>> cache;
  {
    std::scoped_lock lk(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second.count(cert) > 0;
  }
  std::set<Certificate> certs;
  for (long s = 1; 2 * s < n; ++s) {
    for (long t = s + 1; 2 * t < n; ++t) {
      if (gcd_all({n, s, t}) != 1) continue;
      certs.insert(canonical_certificate(build_circulant(n, {s, t})));
    }
  }
  std::scoped_lock lk(mu);
  auto [it, inserted] = cache.emplace(n, std::move(certs));
  return it->second.count(cert) > 0;
}

}  // namespace qbn

