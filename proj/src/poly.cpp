#include <qbn/poly.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qbn {

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(Int coeff, long exp) {
  if (exp < 0) throw std::invalid_argument("monomial: negative exponent");
  if (coeff == 0) return {};
  std::vector<Int> c(exp + 1);
  c[exp] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::from_terms(
    const std::vector<std::pair<long, Int>>& terms) {
  long deg = -1;
  for (const auto& [e, c] : terms) {
    if (e < 0) throw std::invalid_argument("from_terms: negative exponent");
    deg = std::max(deg, e);
  }
  std::vector<Int> coeffs(deg + 1);
  for (const auto& [e, c] : terms) coeffs[e] += c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::power_minus_one(long n) {
  if (n < 1) throw std::invalid_argument("power_minus_one: n must be positive");
  std::vector<Int> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  return IntPolynomial(std::move(c));
}

Int IntPolynomial::coeff(long e) const {
  if (e < 0 || e >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[e];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(c));
}

Int IntPolynomial::eval(const Int& x) const {
  Int r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPolynomial IntPolynomial::compose_power(long p) const {
  if (p < 1) throw std::invalid_argument("compose_power: p must be positive");
  if (is_zero()) return {};
  std::vector<Int> c(p * degree() + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[p * i] = coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::reduce_exponents_mod(long f) const {
  if (f < 1) throw std::invalid_argument("reduce_exponents_mod: f must be positive");
  std::vector<Int> c(std::min<long>(f, coeffs_.size()));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i % f] += coeffs_[i];
  return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divrem(
    const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
  if (den.coeffs_.back() != 1)
    throw std::invalid_argument("divrem: divisor must be monic");
  std::vector<Int> rem = num.coeffs_;
  long dd = den.degree();
  if (num.degree() < dd) return {IntPolynomial{}, num};
  std::vector<Int> quot(num.degree() - dd + 1);
  for (long i = num.degree(); i >= dd; --i) {
    Int q = rem[i];
    if (q == 0) continue;
    quot[i - dd] = q;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den.coeffs_[j];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long e = degree(); e >= 0; --e) {
    const Int& c = coeffs_[e];
    if (c == 0) continue;
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) out << a;
    if (e >= 1) {
      out << "x";
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace qbn
