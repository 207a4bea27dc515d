#include <qbn/classify.hpp>

#include <algorithm>
#include <stdexcept>

namespace qbn {

std::string Reason::str() const {
  switch (kind) {
    case ReasonKind::ConditionsSatisfied: return "conditions-satisfied";
    case ReasonKind::ViolatedCondition: {
      static const char* names[] = {"(i)", "(ii)", "(iii)", "(iv)"};
      return std::string("violated-") + names[condition - 1];
    }
    case ReasonKind::BipartiteClass: return "bipartite-class";
    case ReasonKind::WitnessDivisor: return "witness-divisor";
  }
  return "?";
}

namespace {

Verdict nut_verdict(BicirculantSpec spec) {
  return Verdict{std::move(spec), true, Reason{ReasonKind::ConditionsSatisfied}};
}

Verdict violated(BicirculantSpec spec, int condition,
                 std::optional<long> witness_f = std::nullopt) {
  return Verdict{std::move(spec), false,
                 Reason{ReasonKind::ViolatedCondition, condition, witness_f}};
}

const std::vector<std::array<long, 3>>& sign_expansion(
    const std::vector<std::array<long, 3>>& families, long modulus,
    std::vector<std::array<long, 3>>& out) {
  for (const auto& [u, v, w] : families) {
    for (auto [p, q] : {std::pair{u, v}, std::pair{v, u}}) {
      for (int s1 : {1, -1})
        for (int s2 : {1, -1})
          for (int s3 : {1, -1})
            out.push_back({mod(s1 * p, modulus), mod(s2 * q, modulus),
                           mod(s3 * w, modulus)});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

const std::vector<std::array<long, 3>>& forbidden_mod12() {
  static const std::vector<std::array<long, 3>> table = [] {
    std::vector<std::array<long, 3>> t;
    sign_expansion({{2, 2, 3}}, 12, t);
    return t;
  }();
  return table;
}

const std::vector<std::array<long, 3>>& forbidden_mod30() {
  static const std::vector<std::array<long, 3>> table = [] {
    std::vector<std::array<long, 3>> t;
    sign_expansion({{3, 5, 6}, {3, 9, 10}, {5, 9, 12}}, 30, t);
    return t;
  }();
  return table;
}

Verdict classify_b1(long m, long a, long b) {
  BicirculantSpec spec = make_spec(ClassTag::B1, m, a, b);
  if (m % 4 != 2) return violated(spec, 1);
  if (a % 2 != 0 || b % 2 != 0) return violated(spec, 2);
  if (gcd_all({m / 2, a, b}) != 1) return violated(spec, 3);
  if (m % 5 == 0 && a % 5 != 0 && b % 5 != 0 && (a - b) % 5 != 0 &&
      (a + b) % 5 != 0)
    return violated(spec, 4);
  return nut_verdict(spec);
}

Verdict classify_b2(long m, long a, long b, long c) {
  BicirculantSpec spec = make_spec(ClassTag::B2, m, a, b, c);
  if (std::gcd(m, std::gcd(a - b, a + b + c)) != 1 ||
      std::gcd(m, std::gcd(a - b, a + b - c)) != 1 ||
      std::gcd(m, std::gcd(a + b, a - b + c)) != 1 ||
      std::gcd(m, std::gcd(a + b, a - b - c)) != 1)
    return violated(spec, 1);
  if (v2(m) > v2(c) && (v2(a) == v2(c) - 1 || v2(b) == v2(c) - 1))
    return violated(spec, 2);
  if (m % 12 == 0) {
    std::array<long, 3> key{mod(a + b, 12), mod(a - b, 12), mod(c, 12)};
    const auto& t = forbidden_mod12();
    if (std::binary_search(t.begin(), t.end(), key))
      return violated(spec, 3, 12);
  }
  if (m % 30 == 0) {
    std::array<long, 3> key{mod(a + b, 30), mod(a - b, 30), mod(c, 30)};
    const auto& t = forbidden_mod30();
    if (std::binary_search(t.begin(), t.end(), key))
      return violated(spec, 4, 30);
  }
  return nut_verdict(spec);
}

Verdict classify_b3(long m, long a, long b) {
  BicirculantSpec spec = make_spec(ClassTag::B3, m, a, b);
  if (a % 2 == 0 || b % 2 == 0) return violated(spec, 1);
  if (std::gcd(m, a) != 1) return violated(spec, 2);
  if (std::gcd(m, b) != 1) return violated(spec, 3);
  if (v2(b - a) < v2(m)) return violated(spec, 4);
  return nut_verdict(spec);
}

Verdict classify(const BicirculantSpec& spec) {
  switch (spec.tag) {
    case ClassTag::B1: return classify_b1(spec.m, spec.a, spec.b);
    case ClassTag::B2:
      if (!spec.c) throw SpecError("B2 requires parameters (m; a, b, c)");
      return classify_b2(spec.m, spec.a, spec.b, *spec.c);
    case ClassTag::B3: return classify_b3(spec.m, spec.a, spec.b);
    case ClassTag::B4: {
      BicirculantSpec checked =
          make_spec(ClassTag::B4, spec.m, spec.a, spec.b, spec.c);
      return Verdict{checked, false, Reason{ReasonKind::BipartiteClass}};
    }
  }
  throw std::logic_error("classify: unknown class");
}

}  // namespace qbn
