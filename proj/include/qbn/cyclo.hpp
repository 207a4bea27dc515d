#pragma once

#include <qbn/poly.hpp>
#include <qbn/spec.hpp>

#include <array>
#include <optional>
#include <vector>

namespace qbn {

// f-th cyclotomic polynomial, memoized; safe for concurrent callers.
const IntPolynomial& cyclotomic(long f);

// True iff the f-th cyclotomic polynomial divides p exactly.
bool divides_cyclotomic(long f, const IntPolynomial& p);

// The class polynomials whose cyclotomic divisors encode extra adjacency
// eigenvalue-zero solutions.
IntPolynomial poly_R(long a, long b);              // B1, odd divisors
IntPolynomial poly_Q(long a, long b);              // B1, even divisors
IntPolynomial poly_P(long a, long b, long c);      // B2
IntPolynomial poly_B3(long a, long b);             // B3 triple product

// Divisor-scan nut decision per class lemma; witness_f is the smallest
// divisor of m whose cyclotomic polynomial certifies a repeated zero.
// Rejects B4 (the classifier covers it directly).
struct DivisorVerdict {
  bool is_nut = false;
  std::optional<long> witness_f;
};
DivisorVerdict nut_via_divisors(const BicirculantSpec& spec);

// Finite-set variant: scans only the fixed divisor sets once the class
// arithmetic preconditions hold. Rejects B3/B4.
enum class FiniteSetResult { Nut, NotNut, NotApplicable };
FiniteSetResult nut_via_finite_sets(const BicirculantSpec& spec);

// Exact multiplicity of adjacency eigenvalue 0 for B1-B3 specs, computed
// divisor by divisor: f is satisfied when the orbit eigenvalue equation
// holds at primitive f-th roots of unity, contributing phi(f) once, or
// twice when both diagonal and off-diagonal orbit eigenvalues vanish
// together (possible only for B2). Rejects B4.
struct ZeroSpectrumReport {
  BicirculantSpec spec;
  std::vector<long> satisfied_divisors;  // ascending
  long multiplicity = 0;
};
ZeroSpectrumReport zero_multiplicity(const BicirculantSpec& spec);

// The 19 divisor values that can carry extra zero eigenvalues for B2.
const std::vector<long>& finite_divisor_pool();

// Residue triples ((a+b) mod f, (a-b) mod f, c mod f) over 1 <= a,b,c <= f
// that pass the B2 coprimality/valuation filters yet satisfy the
// divisibility test; deduplicated and sorted. f must lie in
// finite_divisor_pool().
struct ResidueTriple {
  long s = 0;  // (a+b) mod f
  long d = 0;  // (a-b) mod f
  long c = 0;  // c mod f
  auto operator<=>(const ResidueTriple&) const = default;
};
std::vector<ResidueTriple> residue_search(long f);
// The raw (a, b, c) hits behind residue_search, in loop order.
std::vector<std::array<long, 3>> residue_search_raw(long f);

}  // namespace qbn
