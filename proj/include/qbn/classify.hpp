#pragma once

#include <qbn/numbers.hpp>
#include <qbn/spec.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qbn {

enum class ReasonKind {
  ConditionsSatisfied,
  ViolatedCondition,
  BipartiteClass,
  WitnessDivisor,
};

struct Reason {
  ReasonKind kind = ReasonKind::ConditionsSatisfied;
  int condition = 0;              // 1-based condition index for ViolatedCondition
  std::optional<long> witness_f;  // modulus backing the violated condition

  // "conditions-satisfied", "violated-(iii)", "bipartite-class",
  // "witness-divisor".
  std::string str() const;
};

struct Verdict {
  BicirculantSpec spec;
  bool is_nut = false;
  Reason reason;
};

// Arithmetic nut/not-nut decisions per class; the reason names the first
// violated condition in stated order. Parameters are range-checked.
Verdict classify_b1(long m, long a, long b);
Verdict classify_b2(long m, long a, long b, long c);
Verdict classify_b3(long m, long a, long b);

// Dispatch by class; B4 is always not-nut (bipartite family).
Verdict classify(const BicirculantSpec& spec);

// The residue patterns ((a+b), (a-b), c) that defeat B2 specs when the
// order is divisible by 12 or 30; sorted ascending. Materialized from the
// sign expansions; test code cross-derives them via residue_search.
const std::vector<std::array<long, 3>>& forbidden_mod12();
const std::vector<std::array<long, 3>>& forbidden_mod30();

}  // namespace qbn
