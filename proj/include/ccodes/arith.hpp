#pragma once

// Multiplicative number theory: factorization, divisors, Moebius, totient,
// and Ramanujan sums (Kluyver divisor form plus a literal complex-sum oracle).

#include "ccodes/bigint.hpp"
#include "ccodes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace ccodes {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer together with its prime factorization, primes strictly increasing.
class FactoredInteger {
 public:
  FactoredInteger() : value_(1) {}

  FactoredInteger(BigInt value, std::vector<PrimePower> factors)
      : value_(std::move(value)), factors_(std::move(factors)) {
    BigInt product = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i].exponent == 0 || factors_[i].prime < 2)
        throw std::invalid_argument("FactoredInteger: bad prime power");
      if (i > 0 && !(factors_[i - 1].prime < factors_[i].prime))
        throw std::invalid_argument("FactoredInteger: primes must be strictly increasing");
      product *= pow(factors_[i].prime, factors_[i].exponent);
    }
    if (product != value_) throw std::invalid_argument("FactoredInteger: factors do not multiply to value");
  }

  const BigInt& value() const noexcept { return value_; }
  const std::vector<PrimePower>& factors() const noexcept { return factors_; }

  std::size_t divisor_count() const {
    std::size_t count = 1;
    for (const auto& f : factors_) count *= f.exponent + 1;
    return count;
  }

  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

 private:
  BigInt value_;
  std::vector<PrimePower> factors_;
};

namespace detail {

inline std::vector<PrimePower> trial_divide_u64(std::uint64_t n) {
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) out.push_back({BigInt(p), e});
  };
  strip(2);
  strip(3);
  for (std::uint64_t p = 5; static_cast<unsigned __int128>(p) * p <= n; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) out.push_back({BigInt(n), 1});
  return out;
}

inline std::vector<PrimePower> trial_divide_big(BigInt n) {
  std::vector<PrimePower> out;
  for (BigInt p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

}  // namespace detail

/// Prime factorization by trial division up to sqrt(n).
inline FactoredInteger factor(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("factor: n must be positive, got " + n.str());
  auto factors = fits_u64(n) ? detail::trial_divide_u64(n.convert_to<std::uint64_t>())
                             : detail::trial_divide_big(n);
  return FactoredInteger(n, std::move(factors));
}

/// All positive divisors in increasing order.
inline std::vector<BigInt> divisors(const FactoredInteger& n) {
  std::vector<BigInt> out{1};
  out.reserve(n.divisor_count());
  for (const auto& [p, e] : n.factors()) {
    const std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<BigInt> divisors(const BigInt& n) { return divisors(factor(n)); }

inline int moebius(const FactoredInteger& n) {
  int sign = 1;
  for (const auto& f : n.factors()) {
    if (f.exponent >= 2) return 0;
    sign = -sign;
  }
  return sign;
}

inline int moebius(const BigInt& n) { return moebius(factor(n)); }

/// Euler's totient through the divisor sum phi(n) = sum_{d | n} mu(n/d) d.
inline BigInt totient(const FactoredInteger& n) {
  BigInt sum = 0;
  for (const auto& d : divisors(n)) sum += moebius(n.value() / d) * d;
  return sum;
}

inline BigInt totient(const BigInt& n) { return totient(factor(n)); }

/// Euler's totient through the product of p^(e-1) (p - 1).
inline BigInt totient_product(const FactoredInteger& n) {
  BigInt result = 1;
  for (const auto& [p, e] : n.factors()) result *= pow(p, e - 1) * (p - 1);
  return result;
}

/// Ramanujan sum c_n(m) by Kluyver's formula, sum over d | gcd(m, n) of mu(n/d) d.
/// gcd(0, n) is n, so c_n(0) = phi(n).
inline BigInt ramanujan_sum(const FactoredInteger& n, const BigInt& m) {
  const BigInt g = gcd(mod_floor(m, n.value()), n.value());
  // Walk the divisors d of g as exponent vectors bounded by v_p(g); mu(n/d)
  // then follows from the exponent gaps e_p(n) - e_p(d).
  const auto& pf = n.factors();
  std::vector<unsigned> cap(pf.size(), 0);
  for (std::size_t i = 0; i < pf.size(); ++i) {
    BigInt rest = g;
    while (cap[i] < pf[i].exponent && rest % pf[i].prime == 0) {
      rest /= pf[i].prime;
      ++cap[i];
    }
  }
  // Only divisors with every gap <= 1 contribute.
  for (std::size_t i = 0; i < pf.size(); ++i) {
    if (pf[i].exponent - cap[i] >= 2) return 0;
  }
  BigInt sum = 0;
  std::vector<unsigned> exps(pf.size(), 0);
  while (true) {
    bool square_free_gap = true;
    int sign = 1;
    BigInt d = 1;
    for (std::size_t i = 0; i < pf.size(); ++i) {
      const unsigned gap = pf[i].exponent - exps[i];
      if (gap >= 2) {
        square_free_gap = false;
        break;
      }
      if (gap == 1) sign = -sign;
      d *= pow(pf[i].prime, exps[i]);
    }
    if (square_free_gap) sum += sign * d;

    std::size_t i = 0;
    for (; i < pf.size(); ++i) {
      if (exps[i] < cap[i]) {
        ++exps[i];
        break;
      }
      exps[i] = 0;
    }
    if (i == pf.size()) break;
  }
  return sum;
}

inline BigInt ramanujan_sum(const BigInt& n, const BigInt& m) { return ramanujan_sum(factor(n), m); }

/// Literal evaluation of sum over j coprime to n of e(jm/n) in double precision.
/// Throws IntegralityFailure if the imaginary part exceeds 1e-9 * n.
inline double ramanujan_sum_direct(std::uint64_t n, std::int64_t m) {
  if (n == 0) throw std::invalid_argument("ramanujan_sum_direct: n must be positive");
  const auto sn = static_cast<__int128>(n);
  __int128 mr = static_cast<__int128>(m) % sn;
  if (mr < 0) mr += sn;
  std::complex<double> acc{0.0, 0.0};
  for (std::uint64_t j = 1; j <= n; ++j) {
    if (std::gcd(j, n) != 1) continue;
    const auto r = static_cast<std::uint64_t>((static_cast<__int128>(j) * mr) % sn);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    acc += std::polar(1.0, angle);
  }
  const double tolerance = 1e-9 * static_cast<double>(n);
  if (std::abs(acc.imag()) > tolerance)
    throw IntegralityFailure("ramanujan_sum_direct: imaginary residue " + std::to_string(acc.imag()),
                             std::abs(acc.imag()));
  return acc.real();
}

}  // namespace ccodes
