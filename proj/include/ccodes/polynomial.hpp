#pragma once

#include "ccodes/bigint.hpp"
#include "ccodes/errors.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ccodes {

/// Dense univariate polynomial in z; coefficient i multiplies z^i.
/// The highest stored coefficient is nonzero unless the polynomial is zero,
/// in which case no coefficients are stored.
template <class T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

  static Polynomial monomial(T c, std::size_t degree) {
    std::vector<T> v(degree + 1, T(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree, or -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }

  const std::vector<T>& coefficients() const noexcept { return coeffs_; }

  T coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

  const T& leading() const { return coeffs_.back(); }

  template <class U>
  U evaluate(const U& x) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const T& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial p, const T& s) { return p *= s; }
  friend Polynomial operator*(const T& s, Polynomial p) { return p *= s; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<T> out(p.coeffs_.size() + q.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;

template <class T>
Polynomial<T> pow(const Polynomial<T>& base, std::uint64_t exponent) {
  Polynomial<T> result = Polynomial<T>::constant(T(1));
  Polynomial<T> b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

/// Quotient of an exact division. Throws NonExactDivision when a quotient
/// coefficient is not integral or the remainder is nonzero.
template <class T>
Polynomial<T> div_exact(const Polynomial<T>& num, const Polynomial<T>& den) {
  if (den.is_zero()) throw std::invalid_argument("div_exact: division by the zero polynomial");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) throw NonExactDivision("div_exact: divisor degree exceeds dividend degree");

  std::vector<T> rem = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dn = d.size();
  std::vector<T> quot(rem.size() - dn + 1, T(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    const T& top = rem[i + dn - 1];
    if (top == 0) continue;
    if (top % den.leading() != 0) throw NonExactDivision("div_exact: quotient coefficient is not integral");
    const T q = top / den.leading();
    for (std::size_t j = 0; j < dn; ++j) rem[i + j] -= q * d[j];
    quot[i] = q;
  }
  for (const auto& r : rem) {
    if (r != 0) throw NonExactDivision("div_exact: nonzero remainder");
  }
  return Polynomial<T>(std::move(quot));
}

/// Ascending powers with zero terms omitted, e.g. "1 + 2z^2 + z^4".
template <class T>
std::string to_string(const Polynomial<T>& p, char var = 'z') {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    const T magnitude = negative ? T(-c[i]) : c[i];
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0 || magnitude != 1) os << magnitude;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p) {
  return os << to_string(p);
}

}  // namespace ccodes
