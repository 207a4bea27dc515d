#include <qbn/enumerate.hpp>

#include <qbn/canon.hpp>
#include <qbn/classify.hpp>
#include <qbn/cyclo.hpp>
#include <qbn/graph.hpp>
#include <qbn/kernel.hpp>
#include <qbn/parallel.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace qbn {

namespace {

void check_even_order(long n) {
  if (n < 6 || n % 2 != 0)
    throw std::invalid_argument("gen_specs: order must be an even integer >= 6");
}

bool needs_even_m(ClassTag tag) {
  return tag == ClassTag::B1 || tag == ClassTag::B3;
}

struct GraphProps {
  bool bipartite = false;
  bool nut = false;
  bool vt = false;
  bool circulant = false;
};

GraphProps evaluate_graph(const Graph& g) {
  GraphProps p;
  p.bipartite = is_bipartite(g);
  p.nut = nut_oracle(g);
  if (p.nut) {
    p.vt = is_vertex_transitive(g);
    p.circulant = is_circulant(g);
  }
  return p;
}

void add_counts(ClassCounts& cc, const GraphProps& p) {
  cc.connected += 1;
  if (!p.bipartite) cc.nonbipartite += 1;
  if (p.nut) {
    cc.nut += 1;
    if (p.vt) cc.vertex_transitive += 1;
    if (p.circulant) cc.circulant += 1;
  }
}

std::string counts_csv(const ClassCounts& cc) {
  return std::to_string(cc.connected) + "," + std::to_string(cc.nonbipartite) +
         "," + std::to_string(cc.nut) + "," +
         std::to_string(cc.vertex_transitive) + "," +
         std::to_string(cc.circulant);
}

}  // namespace

std::vector<BicirculantSpec> gen_specs(ClassTag tag, long n) {
  check_even_order(n);
  long m = n / 2;
  if (needs_even_m(tag) && m % 2 != 0)
    throw std::invalid_argument(std::string("gen_specs: class ") +
                                class_name(tag) +
                                " needs an order divisible by 4");
  std::vector<BicirculantSpec> out;
  auto keep = [&out](BicirculantSpec s) {
    if (is_connected_params(s)) out.push_back(s);
  };
  switch (tag) {
    case ClassTag::B1:
      for (long a = 1; 2 * a < m; ++a)
        for (long b = a; 2 * b < m; ++b) keep(make_spec(tag, m, a, b));
      break;
    case ClassTag::B2:
      for (long a = 1; 2 * a < m; ++a)
        for (long b = a; 2 * b < m; ++b)
          for (long c = 1; 2 * c <= m; ++c) keep(make_spec(tag, m, a, b, c));
      break;
    case ClassTag::B3:
      for (long a = 1; a < m; ++a)
        for (long b = a + 2; b < m; b += 2) keep(make_spec(tag, m, a, b));
      break;
    case ClassTag::B4:
      for (long a = 1; a < m; ++a)
        for (long b = a + 1; b < m; ++b)
          for (long c = b + 1; c < m; ++c) keep(make_spec(tag, m, a, b, c));
      break;
  }
  return out;
}

TableRow table_row(long n, int threads) {
  if (n % 2 != 0 || n < 8 || n > 50)
    throw std::invalid_argument("table_row: order must be even with 8 <= n <= 50");
  long m = n / 2;

  TableRow row;
  row.n = n;
  for (int t = 0; t < 3; ++t)
    row.class_present[t] =
        !needs_even_m(static_cast<ClassTag>(t)) || m % 2 == 0;

  struct Item {
    BicirculantSpec spec;
    int tag;
  };
  std::vector<Item> items;
  for (int t = 0; t < 4; ++t) {
    ClassTag tag = static_cast<ClassTag>(t);
    if (needs_even_m(tag) && m % 2 != 0) continue;
    for (const BicirculantSpec& s : gen_specs(tag, n))
      items.push_back({s, t});
  }
  long count = static_cast<long>(items.size());

  std::vector<Certificate> certs(count);
  parallel_for(count, threads, [&](long i) {
    certs[i] = canonical_certificate(build_graph(items[i].spec));
  });

  // First occurrence of each certificate across all classes.
  std::map<Certificate, long> rep_of;
  std::vector<long> reps;
  for (long i = 0; i < count; ++i)
    if (rep_of.emplace(certs[i], static_cast<long>(reps.size())).second)
      reps.push_back(i);

  std::vector<GraphProps> props(reps.size());
  parallel_for(static_cast<long>(reps.size()), threads, [&](long k) {
    props[k] = evaluate_graph(build_graph(items[reps[k]].spec));
  });

  for (const GraphProps& p : props) add_counts(row.total, p);

  std::array<std::set<Certificate>, 3> class_seen;
  for (long i = 0; i < count; ++i) {
    int t = items[i].tag;
    if (t >= 3) continue;
    if (class_seen[t].insert(certs[i]).second)
      add_counts(row.per_class[t], props[rep_of.at(certs[i])]);
  }

  for (long i = 0; i < count; ++i) {
    if (classify(items[i].spec).is_nut != props[rep_of.at(certs[i])].nut)
      throw std::logic_error(
          "table_row: classifier and kernel oracle disagree on " +
          to_string(items[i].spec));
  }
  return row;
}

CrosscheckReport crosscheck(long n_max, int threads) {
  if (n_max > 50)
    throw std::invalid_argument("crosscheck: orders above 50 are not supported");

  std::vector<BicirculantSpec> specs;
  for (long n = 6; n <= n_max; n += 2) {
    long m = n / 2;
    for (int t = 0; t < 4; ++t) {
      ClassTag tag = static_cast<ClassTag>(t);
      if (needs_even_m(tag) && m % 2 != 0) continue;
      for (const BicirculantSpec& s : gen_specs(tag, n)) specs.push_back(s);
    }
  }

  struct PerSpec {
    long divisor = 0;
    long finite = 0;
    long mult = 0;
    std::vector<std::string> bad;
  };
  std::vector<PerSpec> results(specs.size());
  auto nut_word = [](bool b) { return b ? "nut" : "not-nut"; };

  parallel_for(static_cast<long>(specs.size()), threads, [&](long i) {
    const BicirculantSpec& s = specs[i];
    PerSpec& r = results[i];
    std::string name = to_string(s);

    Graph g = build_graph(s);
    KernelBasis kb = kernel_basis(adjacency_matrix(g));
    bool oracle = kb.dim == 1;
    if (oracle)
      for (const Rat& x : kb.vectors[0])
        if (x == 0) {
          oracle = false;
          break;
        }

    Verdict v = classify(s);
    if (v.is_nut != oracle)
      r.bad.push_back(name + ": classifier says " + nut_word(v.is_nut) +
                      ", kernel oracle says " + nut_word(oracle));

    if (s.tag != ClassTag::B4) {
      DivisorVerdict dv = nut_via_divisors(s);
      r.divisor += 1;
      if (dv.is_nut != oracle)
        r.bad.push_back(name + ": divisor scan says " + nut_word(dv.is_nut) +
                        ", kernel oracle says " + nut_word(oracle));

      ZeroSpectrumReport zr = zero_multiplicity(s);
      r.mult += 1;
      if (zr.multiplicity != kb.dim)
        r.bad.push_back(name + ": zero multiplicity " +
                        std::to_string(zr.multiplicity) +
                        " != kernel dimension " + std::to_string(kb.dim));
    }

    if (s.tag == ClassTag::B1 || s.tag == ClassTag::B2) {
      FiniteSetResult fs = nut_via_finite_sets(s);
      if (fs != FiniteSetResult::NotApplicable) {
        r.finite += 1;
        bool fs_nut = fs == FiniteSetResult::Nut;
        if (fs_nut != oracle)
          r.bad.push_back(name + ": finite-set scan says " +
                          nut_word(fs_nut) + ", kernel oracle says " +
                          nut_word(oracle));
      }
    }
  });

  CrosscheckReport report;
  report.specs_checked = static_cast<long>(specs.size());
  for (const PerSpec& r : results) {
    report.divisor_comparisons += r.divisor;
    report.finite_set_comparisons += r.finite;
    report.multiplicity_comparisons += r.mult;
    for (const std::string& msg : r.bad) report.disagreements.push_back(msg);
  }
  return report;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::vector<TableRow> sorted = rows;
  std::sort(sorted.begin(), sorted.end(),
            [](const TableRow& x, const TableRow& y) { return x.n < y.n; });
  std::string out = "n,C,B,N,V,Z\n";
  for (const TableRow& r : sorted)
    out += std::to_string(r.n) + "," + counts_csv(r.total) + "\n";
  return out;
}

std::string per_class_csv(const std::vector<TableRow>& rows) {
  std::vector<TableRow> sorted = rows;
  std::sort(sorted.begin(), sorted.end(),
            [](const TableRow& x, const TableRow& y) { return x.n < y.n; });
  std::string out = "n,class,C,B,N,V,Z\n";
  for (const TableRow& r : sorted)
    for (int t = 0; t < 3; ++t) {
      if (!r.class_present[t]) continue;
      out += std::to_string(r.n) + "," + class_name(static_cast<ClassTag>(t)) +
             "," + counts_csv(r.per_class[t]) + "\n";
    }
  return out;
}

}  // namespace qbn
