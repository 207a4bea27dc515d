#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qbn {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Nonnegative remainder of x modulo f (f > 0), also for negative x.
inline long mod(long x, long f) {
  long r = x % f;
  return r < 0 ? r + f : r;
}

inline long gcd_all(std::initializer_list<long> xs) {
  long g = 0;
  for (long x : xs) g = std::gcd(g, x);
  return g;
}

// p-adic valuation: largest e with p^e dividing x.
inline int vp(long p, long x) {
  if (p < 2) throw std::invalid_argument("vp: modulus must be at least 2");
  if (x == 0) throw std::invalid_argument("vp: undefined for 0");
  if (x < 0) x = -x;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

inline int v2(long x) { return vp(2, x); }

// Divisors of n in ascending order.
inline std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors: argument must be positive");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: argument must be positive");
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace qbn
