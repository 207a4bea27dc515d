#include <qbn/kernel.hpp>

#include <stdexcept>

namespace qbn {

IntMatrix IntMatrix::zero(long rows, long cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("IntMatrix: dimensions must be positive");
  IntMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.data.assign(rows * cols, Int(0));
  return m;
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix m = IntMatrix::zero(g.n, g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) m.at(u, v) = 1;
  return m;
}

KernelBasis kernel_basis(const IntMatrix& a) {
  long rows = a.rows, cols = a.cols;
  std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m[r][c] = a.at(r, c);

  // One-step fraction-free elimination: every updated entry is a minor of
  // the input divided by the previous pivot, so the division below is exact.
  std::vector<long> pivot_cols;
  long rank = 0;
  Int prev = 1;
  for (long c = 0; c < cols && rank < rows; ++c) {
    long p = -1;
    for (long r = rank; r < rows; ++r) {
      if (m[r][c] != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    for (long r = rank + 1; r < rows; ++r) {
      for (long cc = c + 1; cc < cols; ++cc) {
        Int num = m[rank][c] * m[r][cc] - m[r][c] * m[rank][cc];
        Int q, rem;
        boost::multiprecision::divide_qr(num, prev, q, rem);
        if (rem != 0)
          throw std::logic_error("kernel_basis: inexact fraction-free step");
        m[r][cc] = std::move(q);
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    pivot_cols.push_back(c);
    ++rank;
  }

  KernelBasis kb;
  kb.rank = rank;
  kb.dim = cols - rank;
  std::vector<char> is_pivot(cols, 0);
  for (long c : pivot_cols) is_pivot[c] = 1;

  for (long j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[j] = 1;
    for (long i = rank - 1; i >= 0; --i) {
      long pc = pivot_cols[i];
      Rat sum = 0;
      for (long k = pc + 1; k < cols; ++k) {
        if (v[k] != 0 && m[i][k] != 0) sum += Rat(m[i][k]) * v[k];
      }
      v[pc] = -sum / Rat(m[i][pc]);
    }
    for (auto& x : v) {
      if (x != 0) {
        Rat lead = x;
        for (auto& y : v) y /= lead;
        break;
      }
    }
    kb.vectors.push_back(std::move(v));
  }
  return kb;
}

bool nut_oracle(const Graph& g) {
  KernelBasis kb = kernel_basis(adjacency_matrix(g));
  if (kb.dim != 1) return false;
  for (const Rat& x : kb.vectors[0])
    if (x == 0) return false;
  return true;
}

}  // namespace qbn
