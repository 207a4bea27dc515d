#include <doctest.h>

#include <qbn/cyclo.hpp>
#include <qbn/graph.hpp>
#include <qbn/kernel.hpp>
#include <qbn/spec.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace qbn;

namespace {

std::vector<BicirculantSpec> sweep_b123(long m_max) {
  std::vector<BicirculantSpec> out;
  for (long m = 3; m <= m_max; ++m) {
    if (m % 2 == 0 && m >= 4) {
      for (long a = 1; 2 * a < m; ++a)
        for (long b = a; 2 * b < m; ++b) out.push_back(make_spec(ClassTag::B1, m, a, b));
      for (long a = 1; a < m; ++a)
        for (long b = a + 2; b < m; b += 2) out.push_back(make_spec(ClassTag::B3, m, a, b));
    }
    for (long a = 1; 2 * a < m; ++a)
      for (long b = a; 2 * b < m; ++b)
        for (long c = 1; 2 * c <= m; ++c)
          out.push_back(make_spec(ClassTag::B2, m, a, b, c));
  }
  return out;
}

}  // namespace

TEST_CASE("divisor scan verdicts on the running examples") {
  auto v1 = nut_via_divisors(make_spec(ClassTag::B2, 24, 4, 6, 3));
  CHECK(!v1.is_nut);
  CHECK(v1.witness_f == 12);

  auto v2 = nut_via_divisors(make_spec(ClassTag::B2, 4, 1, 1, 1));
  CHECK(v2.is_nut);
  CHECK(!v2.witness_f.has_value());

  auto v3 = nut_via_divisors(make_spec(ClassTag::B3, 8, 1, 3));
  CHECK(!v3.is_nut);
  CHECK(v3.witness_f == 4);

  auto v4 = nut_via_divisors(make_spec(ClassTag::B1, 10, 2, 4));
  CHECK(!v4.is_nut);
  CHECK(v4.witness_f == 10);

  CHECK(nut_via_divisors(make_spec(ClassTag::B1, 6, 2, 2)).is_nut);

  // Parity and residue preconditions fail without any divisor witness.
  auto v5 = nut_via_divisors(make_spec(ClassTag::B1, 8, 2, 2));
  CHECK(!v5.is_nut);
  CHECK(!v5.witness_f.has_value());
  auto v6 = nut_via_divisors(make_spec(ClassTag::B3, 6, 2, 4));
  CHECK(!v6.is_nut);
  CHECK(!v6.witness_f.has_value());

  CHECK_THROWS_AS(nut_via_divisors(make_spec(ClassTag::B4, 4, 1, 2, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(nut_via_divisors({ClassTag::B2, 6, 1, 3, 1}), SpecError);
}

TEST_CASE("finite-set verdicts and their applicability gate") {
  CHECK(nut_via_finite_sets(make_spec(ClassTag::B2, 4, 1, 1, 1)) ==
        FiniteSetResult::Nut);
  CHECK(nut_via_finite_sets(make_spec(ClassTag::B2, 6, 1, 2, 3)) ==
        FiniteSetResult::Nut);
  CHECK(nut_via_finite_sets(make_spec(ClassTag::B2, 24, 4, 6, 3)) ==
        FiniteSetResult::NotNut);
  CHECK(nut_via_finite_sets(make_spec(ClassTag::B2, 30, 1, 4, 6)) ==
        FiniteSetResult::NotNut);
  CHECK(nut_via_finite_sets(make_spec(ClassTag::B2, 6, 1, 1, 1)) ==
        FiniteSetResult::NotApplicable);
  CHECK(nut_via_finite_sets(make_spec(ClassTag::B1, 6, 2, 2)) ==
        FiniteSetResult::Nut);
  CHECK(nut_via_finite_sets(make_spec(ClassTag::B1, 8, 2, 2)) ==
        FiniteSetResult::NotApplicable);
  CHECK(nut_via_finite_sets(make_spec(ClassTag::B1, 10, 2, 4)) ==
        FiniteSetResult::NotApplicable);
  CHECK_THROWS_AS(nut_via_finite_sets(make_spec(ClassTag::B3, 6, 1, 5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(nut_via_finite_sets(make_spec(ClassTag::B4, 4, 1, 2, 3)),
                  std::invalid_argument);
}

TEST_CASE("zero multiplicity reports the satisfied divisors") {
  auto r1 = zero_multiplicity(make_spec(ClassTag::B2, 24, 4, 6, 3));
  CHECK(r1.multiplicity == 5);
  CHECK(r1.satisfied_divisors == std::vector<long>{1, 12});

  auto r2 = zero_multiplicity(make_spec(ClassTag::B2, 4, 1, 1, 2));
  CHECK(r2.multiplicity == 6);  // the doubled-weight case
  CHECK(r2.satisfied_divisors == std::vector<long>{1, 2, 4});

  auto r3 = zero_multiplicity(make_spec(ClassTag::B2, 6, 1, 2, 3));
  CHECK(r3.multiplicity == 1);
  CHECK(r3.satisfied_divisors == std::vector<long>{1});

  auto r4 = zero_multiplicity(make_spec(ClassTag::B1, 6, 2, 2));
  CHECK(r4.multiplicity == 1);
  CHECK(r4.satisfied_divisors == std::vector<long>{2});

  auto r5 = zero_multiplicity(make_spec(ClassTag::B3, 6, 1, 5));
  CHECK(r5.multiplicity == 1);
  CHECK(r5.satisfied_divisors == std::vector<long>{2});

  auto r6 = zero_multiplicity(make_spec(ClassTag::B3, 8, 1, 3));
  CHECK(r6.multiplicity == 3);
  CHECK(r6.satisfied_divisors == std::vector<long>{2, 4});

  CHECK_THROWS_AS(zero_multiplicity(make_spec(ClassTag::B4, 4, 1, 2, 3)),
                  std::invalid_argument);
}

TEST_CASE("zero multiplicity equals the exact kernel dimension up to order 24") {
  for (const auto& s : sweep_b123(12)) {
    long dim = kernel_basis(adjacency_matrix(build_graph(s))).dim;
    auto report = zero_multiplicity(s);
    CHECK_MESSAGE(report.multiplicity == dim, to_string(s));
    CHECK(std::is_sorted(report.satisfied_divisors.begin(),
                         report.satisfied_divisors.end()));
  }
}

TEST_CASE("divisor verdict matches the kernel nut test up to order 24") {
  for (const auto& s : sweep_b123(12)) {
    if (!is_connected_params(s)) continue;
    bool nut = nut_oracle(build_graph(s));
    CHECK_MESSAGE(nut_via_divisors(s).is_nut == nut, to_string(s));
  }
}

TEST_CASE("the divisor pool is the fixed 19-element list") {
  const auto& pool = finite_divisor_pool();
  CHECK(pool.size() == 19);
  CHECK(std::is_sorted(pool.begin(), pool.end()));
  CHECK(std::binary_search(pool.begin(), pool.end(), 12));
  CHECK(std::binary_search(pool.begin(), pool.end(), 30));
  CHECK(std::binary_search(pool.begin(), pool.end(), 120));
  CHECK(!std::binary_search(pool.begin(), pool.end(), 11));
  CHECK(pool.front() == 2);
  CHECK(pool.back() == 120);
}

TEST_CASE("residue search finds hits only at 12 and 30") {
  auto t12 = residue_search(12);
  std::vector<ResidueTriple> expect12 = {
      {2, 2, 3}, {2, 2, 9}, {2, 10, 3}, {2, 10, 9},
      {10, 2, 3}, {10, 2, 9}, {10, 10, 3}, {10, 10, 9},
  };
  CHECK(t12 == expect12);

  auto t30 = residue_search(30);
  CHECK(t30.size() == 48);
  CHECK(std::is_sorted(t30.begin(), t30.end()));
  CHECK(std::binary_search(t30.begin(), t30.end(), ResidueTriple{3, 5, 6}));
  CHECK(std::binary_search(t30.begin(), t30.end(), ResidueTriple{27, 25, 24}));

  for (long f : finite_divisor_pool()) {
    if (f == 12 || f == 30) continue;
    CHECK_MESSAGE(residue_search(f).empty(), f);
  }
  CHECK_THROWS_AS(residue_search(11), std::invalid_argument);
  CHECK_THROWS_AS(residue_search(1), std::invalid_argument);
}

TEST_CASE("raw residue hits stay in range and reduce to the deduped triples") {
  auto raw = residue_search_raw(12);
  CHECK(!raw.empty());
  std::vector<ResidueTriple> reduced;
  for (const auto& [a, b, c] : raw) {
    CHECK(a >= 1);
    CHECK(a <= 12);
    CHECK(b >= 1);
    CHECK(b <= 12);
    CHECK(c >= 1);
    CHECK(c <= 12);
    reduced.push_back({mod(a + b, 12), mod(a - b, 12), mod(c, 12)});
  }
  std::sort(reduced.begin(), reduced.end());
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
  CHECK(reduced == residue_search(12));
}
