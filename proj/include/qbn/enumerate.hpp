#pragma once

#include <qbn/spec.hpp>

#include <array>
#include <string>
#include <vector>

namespace qbn {

// One column group of the census table: counts of isomorphism classes.
struct ClassCounts {
  long connected = 0;          // C
  long nonbipartite = 0;       // B
  long nut = 0;                // N
  long vertex_transitive = 0;  // V, among nut graphs
  long circulant = 0;          // Z, among nut graphs
};

struct TableRow {
  long n = 0;
  ClassCounts total;                       // deduplicated across all classes
  std::array<ClassCounts, 3> per_class;    // B1, B2, B3, deduplicated per class
  std::array<bool, 3> class_present{};     // B1/B3 rows exist only when m is even
};

// All connected canonical-range parameter choices of one class with 2m = n,
// in deterministic lexicographic order. Throws when the class requires an
// even m and n/2 is odd, or when n is odd or below 6.
std::vector<BicirculantSpec> gen_specs(ClassTag tag, long n);

// Census of order n over all four classes: builds every generated spec,
// deduplicates by canonical certificate, and counts connectivity,
// bipartiteness, nut status, vertex-transitivity and circulant status.
// The kernel oracle is the counted truth; any disagreement with the
// arithmetic classifier throws.
TableRow table_row(long n, int threads = 1);

struct CrosscheckReport {
  long specs_checked = 0;
  long divisor_comparisons = 0;
  long finite_set_comparisons = 0;
  long multiplicity_comparisons = 0;
  std::vector<std::string> disagreements;

  bool ok() const { return disagreements.empty(); }
};

// Compares the classifier, the divisor-polynomial test, the finite-set test
// and the exact kernel on every connected spec of every class with order in
// [6, n_max]. Disagreements become report entries, never exceptions.
CrosscheckReport crosscheck(long n_max, int threads = 1);

// CSV blocks; headers are fixed interface.
std::string table_csv(const std::vector<TableRow>& rows);
std::string per_class_csv(const std::vector<TableRow>& rows);

}  // namespace qbn
