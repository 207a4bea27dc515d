#pragma once

#include <qbn/numbers.hpp>

#include <string>
#include <utility>
#include <vector>

namespace qbn {

// Dense univariate polynomial over arbitrary-precision integers.
// coeffs()[i] is the coefficient of x^i; the zero polynomial has no
// coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static IntPolynomial monomial(Int coeff, long exp);
  // Builds from (exponent, coefficient) terms; repeated exponents combine.
  static IntPolynomial from_terms(
      const std::vector<std::pair<long, Int>>& terms);
  // x^n - 1
  static IntPolynomial power_minus_one(long n);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Int coeff(long e) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool operator==(const IntPolynomial&) const = default;
  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;

  Int eval(const Int& x) const;
  // Substitutes x -> x^p.
  IntPolynomial compose_power(long p) const;
  // Maps every exponent e to e mod f, combining collided terms.
  IntPolynomial reduce_exponents_mod(long f) const;

  // Quotient and remainder over the integers; the divisor must be monic.
  static std::pair<IntPolynomial, IntPolynomial> divrem(
      const IntPolynomial& num, const IntPolynomial& den);

  // Rendering like "x^4 - x^2 + 1"; the zero polynomial prints "0".
  std::string str() const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

}  // namespace qbn
