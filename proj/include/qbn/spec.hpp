#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qbn {

// The four families of connected quartic bicirculants, told apart by how
// many edges run between the two orbits per vertex (|R| = 1, 2, 3, 4).
enum class ClassTag { B1, B2, B3, B4 };

const char* class_name(ClassTag t);
std::optional<ClassTag> class_from_name(std::string_view s);

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameters (m; a, b[, c]) of one bicirculant on 2m vertices.
// Connection sets by class:
//   B1: S = {a, -a, m/2}, T = {b, -b, m/2}, R = {0}
//   B2: S = {a, -a},      T = {b, -b},      R = {0, c}
//   B3: S = T = {m/2},                      R = {0, a, b}
//   B4: S = T = {},                         R = {0, a, b, c}
struct BicirculantSpec {
  ClassTag tag = ClassTag::B1;
  long m = 0;
  long a = 0;
  long b = 0;
  std::optional<long> c;

  bool operator==(const BicirculantSpec&) const = default;
};

// Validates the canonical parameter ranges and returns the spec, or throws
// SpecError naming the violated constraint.
//   B1: m even >= 4, 1 <= a <= b < m/2
//   B2: m >= 3, 1 <= a <= b < m/2, 1 <= c <= m/2
//   B3: m even >= 4, 1 <= a < b < m, a and b of equal parity
//   B4: m >= 4, 1 <= a < b < c < m
BicirculantSpec make_spec(ClassTag tag, long m, long a, long b,
                          std::optional<long> c = std::nullopt);

// True when the connection sets are nondegenerate (distinct elements, no
// fixed points), i.e. build_graph can produce a simple 4-regular graph.
// Canonical ranges are not required here.
bool is_buildable(const BicirculantSpec& s);

// Maps any buildable spec to the canonical-range spec of an isomorphic
// graph: folding modulo m and negation for B1/B2, the full shift/negation
// orbit of the connection set for B3, sorting for B4. Idempotent.
BicirculantSpec normalize_spec(const BicirculantSpec& s);

// Connectivity from parameters alone: gcd of m and all connection-set
// elements equals 1 (the set R always contains 0, so the two orbits are
// bridged directly).
bool is_connected_params(const BicirculantSpec& s);

// Text form "B2(24;4,6,3)".
std::string to_string(const BicirculantSpec& s);

// Parses the text form, tolerating whitespace between tokens; validates
// ranges via make_spec. Throws SpecError on malformed input.
BicirculantSpec parse_spec(const std::string& text);

// Syntax-only variant: same grammar, no range validation, so the result
// may need normalize_spec before use. Throws SpecError on malformed input.
BicirculantSpec parse_spec_raw(const std::string& text);

}  // namespace qbn
