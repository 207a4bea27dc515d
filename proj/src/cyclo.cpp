#include <qbn/cyclo.hpp>

#include <qbn/numbers.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace qbn {

namespace {

std::mutex cyclo_mu;

std::map<long, IntPolynomial>& cyclo_cache() {
  static std::map<long, IntPolynomial> cache;
  return cache;
}

const IntPolynomial& cyclotomic_locked(long f) {
  auto& cache = cyclo_cache();
  if (auto it = cache.find(f); it != cache.end()) return it->second;
  IntPolynomial prod = IntPolynomial::monomial(1, 0);
  for (long d : divisors(f))
    if (d < f) prod = prod * cyclotomic_locked(d);
  auto [q, r] = IntPolynomial::divrem(IntPolynomial::power_minus_one(f), prod);
  if (!r.is_zero()) throw std::logic_error("cyclotomic: inexact division");
  return cache.emplace(f, std::move(q)).first->second;
}

}  // namespace

const IntPolynomial& cyclotomic(long f) {
  if (f < 1) throw std::invalid_argument("cyclotomic: f must be positive");
  std::scoped_lock lk(cyclo_mu);
  return cyclotomic_locked(f);
}

bool divides_cyclotomic(long f, const IntPolynomial& p) {
  if (p.is_zero()) return true;
  const IntPolynomial& phi = cyclotomic(f);
  if (p.degree() < phi.degree()) return false;
  return IntPolynomial::divrem(p, phi).second.is_zero();
}

IntPolynomial poly_R(long a, long b) {
  if (a < 1 || b < a) throw std::invalid_argument("poly_R: requires 1 <= a <= b");
  return IntPolynomial::from_terms({{2 * a + 2 * b, 1},
                                    {2 * a, 1},
                                    {2 * b, 1},
                                    {0, 1},
                                    {2 * a + b, 1},
                                    {a + 2 * b, 1},
                                    {a, 1},
                                    {b, 1}});
}

IntPolynomial poly_Q(long a, long b) {
  if (a < 1 || b < a) throw std::invalid_argument("poly_Q: requires 1 <= a <= b");
  return IntPolynomial::from_terms({{2 * a + 2 * b, 1},
                                    {2 * a, 1},
                                    {2 * b, 1},
                                    {0, 1},
                                    {2 * a + b, -1},
                                    {a + 2 * b, -1},
                                    {a, -1},
                                    {b, -1}});
}

IntPolynomial poly_P(long a, long b, long c) {
  if (a < 1 || b < 1 || c < 1)
    throw std::invalid_argument("poly_P: requires a, b, c >= 1");
  return IntPolynomial::from_terms({{2 * a + 2 * b + c, 1},
                                    {2 * a + c, 1},
                                    {2 * b + c, 1},
                                    {c, 1},
                                    {a + b + 2 * c, -1},
                                    {a + b, -1},
                                    {a + b + c, -2}});
}

IntPolynomial poly_B3(long a, long b) {
  if (a < 1 || b <= a) throw std::invalid_argument("poly_B3: requires 1 <= a < b");
  auto binom = [](long e) {
    return IntPolynomial::from_terms({{e, Int(1)}, {0, Int(1)}});
  };
  return binom(b - a) * binom(a) * binom(b);
}

namespace {

void reject_class(const BicirculantSpec& spec, ClassTag banned, const char* op) {
  if (spec.tag == banned)
    throw std::invalid_argument(std::string(op) + ": class " +
                                class_name(spec.tag) + " is not supported");
}

// Arithmetic nut conditions shared by the finite-set gate. Kept local so
// this unit stays independent of the classifier.
bool b1_conditions_hold(long m, long a, long b) {
  if (m % 4 != 2) return false;
  if (a % 2 != 0 || b % 2 != 0) return false;
  if (gcd_all({m / 2, a, b}) != 1) return false;
  if (m % 5 == 0 && a % 5 != 0 && b % 5 != 0 && (a - b) % 5 != 0 &&
      (a + b) % 5 != 0)
    return false;
  return true;
}

bool b2_conditions_i_ii_hold(long m, long a, long b, long c) {
  if (std::gcd(m, std::gcd(a - b, a + b + c)) != 1) return false;
  if (std::gcd(m, std::gcd(a - b, a + b - c)) != 1) return false;
  if (std::gcd(m, std::gcd(a + b, a - b + c)) != 1) return false;
  if (std::gcd(m, std::gcd(a + b, a - b - c)) != 1) return false;
  if (v2(m) > v2(c) && (v2(a) == v2(c) - 1 || v2(b) == v2(c) - 1)) return false;
  return true;
}

}  // namespace

DivisorVerdict nut_via_divisors(const BicirculantSpec& spec) {
  reject_class(spec, ClassTag::B4, "nut_via_divisors");
  make_spec(spec.tag, spec.m, spec.a, spec.b, spec.c);
  long m = spec.m, a = spec.a, b = spec.b;
  switch (spec.tag) {
    case ClassTag::B1: {
      if (m % 4 != 2) return {false, std::nullopt};
      if (a % 2 != 0 || b % 2 != 0) return {false, std::nullopt};
      IntPolynomial r = poly_R(a, b), q = poly_Q(a, b);
      for (long f : divisors(m)) {
        if (f >= 3 && f % 2 == 1 && divides_cyclotomic(f, r)) return {false, f};
        if (f >= 4 && f % 2 == 0 && divides_cyclotomic(f, q)) return {false, f};
      }
      return {true, std::nullopt};
    }
    case ClassTag::B2: {
      IntPolynomial p = poly_P(a, b, *spec.c);
      for (long f : divisors(m))
        if (f >= 2 && divides_cyclotomic(f, p)) return {false, f};
      return {true, std::nullopt};
    }
    case ClassTag::B3: {
      if (a % 2 == 0 || b % 2 == 0) return {false, std::nullopt};
      IntPolynomial d = poly_B3(a, b);
      for (long f : divisors(m))
        if (f >= 3 && divides_cyclotomic(f, d)) return {false, f};
      return {true, std::nullopt};
    }
    default: break;
  }
  throw std::logic_error("nut_via_divisors: unreachable");
}

FiniteSetResult nut_via_finite_sets(const BicirculantSpec& spec) {
  reject_class(spec, ClassTag::B3, "nut_via_finite_sets");
  reject_class(spec, ClassTag::B4, "nut_via_finite_sets");
  make_spec(spec.tag, spec.m, spec.a, spec.b, spec.c);
  long m = spec.m, a = spec.a, b = spec.b;
  if (spec.tag == ClassTag::B1) {
    if (!b1_conditions_hold(m, a, b)) return FiniteSetResult::NotApplicable;
    static const long odd_set[] = {3, 5, 7, 15, 21};
    static const long even_set[] = {6, 10, 14, 30, 42};
    IntPolynomial r = poly_R(a, b), q = poly_Q(a, b);
    for (long f : odd_set)
      if (m % f == 0 && divides_cyclotomic(f, r)) return FiniteSetResult::NotNut;
    for (long f : even_set)
      if (m % f == 0 && divides_cyclotomic(f, q)) return FiniteSetResult::NotNut;
    return FiniteSetResult::Nut;
  }
  long c = *spec.c;
  if (!b2_conditions_i_ii_hold(m, a, b, c)) return FiniteSetResult::NotApplicable;
  IntPolynomial p = poly_P(a, b, c);
  for (long f : finite_divisor_pool())
    if (m % f == 0 && divides_cyclotomic(f, p)) return FiniteSetResult::NotNut;
  return FiniteSetResult::Nut;
}

ZeroSpectrumReport zero_multiplicity(const BicirculantSpec& spec) {
  reject_class(spec, ClassTag::B4, "zero_multiplicity");
  make_spec(spec.tag, spec.m, spec.a, spec.b, spec.c);
  long m = spec.m, a = spec.a, b = spec.b;
  ZeroSpectrumReport report;
  report.spec = spec;

  auto one_plus_power = [](long e) {
    return IntPolynomial::from_terms({{e, Int(1)}, {0, Int(1)}});
  };

  IntPolynomial fixed;
  if (spec.tag == ClassTag::B2) fixed = poly_P(a, b, *spec.c);
  if (spec.tag == ClassTag::B3) fixed = poly_B3(a, b);

  for (long f : divisors(m)) {
    IntPolynomial d;
    if (spec.tag == ClassTag::B1) {
      // Orbit eigenvalue equation scaled by x^(a+b), with the voltage term
      // x^(m/2) reduced to x^((m/2) mod f) at primitive f-th roots.
      long s = (m / 2) % f;
      IntPolynomial fa =
          IntPolynomial::from_terms({{2 * a, 1}, {0, 1}, {a + s, 1}});
      IntPolynomial fb =
          IntPolynomial::from_terms({{2 * b, 1}, {0, 1}, {b + s, 1}});
      d = fa * fb - IntPolynomial::monomial(1, a + b);
    } else {
      d = fixed;
    }
    if (!divides_cyclotomic(f, d)) continue;
    report.satisfied_divisors.push_back(f);
    long weight = 1;
    if (spec.tag == ClassTag::B2 &&
        divides_cyclotomic(f, one_plus_power(2 * a)) &&
        divides_cyclotomic(f, one_plus_power(2 * b)) &&
        divides_cyclotomic(f, one_plus_power(*spec.c))) {
      // Both orbit eigenvalues and the cross term vanish: the zero
      // eigenvalue is doubled at each of these phi(f) spectrum slots.
      weight = 2;
    }
    report.multiplicity += euler_phi(f) * weight;
  }
  return report;
}

const std::vector<long>& finite_divisor_pool() {
  static const std::vector<long> pool = {2,  3,  4,  5,  6,  7,  8,  10, 12, 14,
                                         15, 20, 24, 28, 30, 40, 56, 60, 120};
  return pool;
}

std::vector<std::array<long, 3>> residue_search_raw(long f) {
  const auto& pool = finite_divisor_pool();
  if (!std::binary_search(pool.begin(), pool.end(), f))
    throw std::invalid_argument("residue_search: f is outside the divisor pool");
  std::vector<std::array<long, 3>> hits;
  for (long a = 1; a <= f; ++a) {
    for (long b = 1; b <= f; ++b) {
      for (long c = 1; c <= f; ++c) {
        if (std::gcd(std::gcd(f, a - b), c + a + b) != 1) continue;
        if (std::gcd(std::gcd(f, a - b), c - a - b) != 1) continue;
        if (std::gcd(std::gcd(f, a + b), c + a - b) != 1) continue;
        if (std::gcd(std::gcd(f, a + b), c - a + b) != 1) continue;
        if (v2(c) == v2(a) + 1 && v2(f) > v2(c)) continue;
        if (v2(c) == v2(b) + 1 && v2(f) > v2(c)) continue;
        IntPolynomial q = IntPolynomial::from_terms({{mod(a + b, f), 1},
                                                     {mod(a - b, f), 1},
                                                     {mod(b - a, f), 1},
                                                     {mod(-a - b, f), 1},
                                                     {0, -2},
                                                     {mod(c, f), -1},
                                                     {mod(-c, f), -1}});
        if (divides_cyclotomic(f, q)) hits.push_back({a, b, c});
      }
    }
  }
  return hits;
}

std::vector<ResidueTriple> residue_search(long f) {
  std::set<ResidueTriple> dedup;
  for (const auto& [a, b, c] : residue_search_raw(f))
    dedup.insert(ResidueTriple{mod(a + b, f), mod(a - b, f), mod(c, f)});
  return {dedup.begin(), dedup.end()};
}

}  // namespace qbn
