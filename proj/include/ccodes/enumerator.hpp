#pragma once

// Counting formulas for binary linear congruence codes and their named
// specializations: the exact group-ring engine, the literal character-sum
// and cosine-product float evaluations, Lehmer's Z_n^k count, the
// Ramanujan-sum closed forms for VT codes, and Shifted VT sizes.

#include "ccodes/arith.hpp"
#include "ccodes/bigint.hpp"
#include "ccodes/codes.hpp"
#include "ccodes/errors.hpp"
#include "ccodes/polynomial.hpp"
#include "ccodes/residue.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccodes {

/// Absolute tolerance on |raw - round(raw)| for float evaluations.
inline constexpr double kIntegralityTolerance = 1e-6;

/// Largest modulus for which the float m-loops are run.
inline constexpr std::uint64_t kMaxFloatModulus = 10'000'000;

/// Longest tuple the engine will enumerate directly when n > 2^k.
inline constexpr std::size_t kMaxSubsetLength = 34;

/// W(z) = sum_t N_t z^t for codes of length k; counts has exactly k + 1 entries.
class WeightEnumerator {
 public:
  WeightEnumerator() : counts_(1, BigInt(0)) {}

  explicit WeightEnumerator(std::size_t k) : counts_(k + 1, BigInt(0)) {}

  WeightEnumerator(std::size_t k, std::vector<BigInt> counts) : counts_(std::move(counts)) {
    if (counts_.size() > k + 1) throw std::invalid_argument("WeightEnumerator: more than k + 1 counts");
    counts_.resize(k + 1, BigInt(0));
  }

  WeightEnumerator(std::size_t k, const IntPolynomial& w) : WeightEnumerator(k, w.coefficients()) {}

  std::size_t length() const noexcept { return counts_.size() - 1; }
  const std::vector<BigInt>& counts() const noexcept { return counts_; }
  const BigInt& count(std::size_t t) const { return counts_.at(t); }
  BigInt& count(std::size_t t) { return counts_.at(t); }

  /// Code size W(1).
  BigInt size() const {
    BigInt total = 0;
    for (const auto& c : counts_) total += c;
    return total;
  }

  IntPolynomial polynomial() const { return IntPolynomial(counts_); }

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;

 private:
  std::vector<BigInt> counts_;
};

/// Keeps only the weights t with t == parity (mod 2).
inline WeightEnumerator parity_filter(const WeightEnumerator& w, int parity) {
  WeightEnumerator out(w.length());
  for (std::size_t t = 0; t <= w.length(); ++t)
    if (static_cast<int>(t % 2) == parity) out.count(t) = w.count(t);
  return out;
}

/// Homogeneous form sum_t N_t x^t y^(k - t).
template <class T>
T homogeneous_enumerator(const WeightEnumerator& w, const T& x, const T& y) {
  const std::size_t k = w.length();
  T sum(0);
  for (std::size_t t = 0; t <= k; ++t) {
    T term = T(w.count(t));
    for (std::size_t i = 0; i < t; ++i) term *= x;
    for (std::size_t i = t; i < k; ++i) term *= y;
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Ramanujan-sum closed forms for VT codes
// ---------------------------------------------------------------------------

namespace detail {

inline void check_vt_args(std::uint64_t n, const BigInt& b) {
  if (n < 1) throw InvalidSpec("vt: n must be >= 1");
  if (b < 0 || b > BigInt(n)) throw InvalidSpec("vt: residue " + b.str() + " out of range [0, " + std::to_string(n) + "]");
}

}  // namespace detail

/// W(z) = (1 / ((z + 1)(n + 1))) sum_{d | n+1} c_d(b) (1 - (-z)^d)^((n+1)/d).
inline WeightEnumerator vt_weight_enumerator_closed(std::uint64_t n, const BigInt& b) {
  detail::check_vt_args(n, b);
  const BigInt big_n = BigInt(n) + 1;
  IntPolynomial numerator;
  for (const auto& d_big : divisors(big_n)) {
    const BigInt c = ramanujan_sum(d_big, b);
    if (c == 0) continue;
    const std::uint64_t d = to_u64(d_big);
    const std::uint64_t reps = to_u64(big_n / d_big);
    // (1 - (-z)^d)^reps = sum_i C(reps, i) (sign z^d)^i with sign = -(-1)^d.
    const int sign = (d % 2 == 0) ? -1 : 1;
    std::vector<BigInt> coeffs(d * reps + 1, BigInt(0));
    for (std::uint64_t i = 0; i <= reps; ++i) {
      BigInt term = binomial(reps, i) * c;
      if (sign < 0 && (i % 2 == 1)) term = -term;
      coeffs[d * i] = std::move(term);
    }
    numerator += IntPolynomial(std::move(coeffs));
  }
  const IntPolynomial scaled = div_exact(numerator, IntPolynomial::constant(big_n));
  return WeightEnumerator(n, div_exact(scaled, IntPolynomial{1, 1}));
}

/// N_t = ((-1)^t / (n+1)) sum_{d | n+1} (-1)^floor(t/d) c_d(b) C((n+1)/d - 1, floor(t/d)).
inline BigInt vt_weight_count(std::uint64_t n, const BigInt& b, std::uint64_t t) {
  detail::check_vt_args(n, b);
  if (t > n) throw InvalidSpec("vt_weight_count: t must be <= n");
  const BigInt big_n = BigInt(n) + 1;
  BigInt sum = 0;
  for (const auto& d_big : divisors(big_n)) {
    const std::uint64_t d = to_u64(d_big);
    const std::uint64_t q = t / d;
    BigInt term = ramanujan_sum(d_big, b) * binomial(to_u64(big_n / d_big) - 1, q);
    if (q % 2 == 1) term = -term;
    sum += term;
  }
  if (t % 2 == 1) sum = -sum;
  if (sum % big_n != 0) throw NonExactDivision("vt_weight_count: sum not divisible by n + 1");
  return sum / big_n;
}

/// |VT_{b,q}(n)| = (1 / (q(n+1))) sum_{d | n+1, gcd(d, q) = 1} c_d(b) q^((n+1)/d).
inline BigInt vt_q_size(std::uint64_t n, const BigInt& b, std::uint64_t q) {
  detail::check_vt_args(n, b);
  if (q < 1) throw InvalidSpec("vt_q_size: q must be >= 1");
  const BigInt big_n = BigInt(n) + 1;
  const BigInt big_q(q);
  BigInt sum = 0;
  for (const auto& d : divisors(big_n)) {
    if (gcd(d, big_q) != 1) continue;
    sum += ramanujan_sum(d, b) * pow(big_q, to_u64(big_n / d));
  }
  const BigInt denom = big_q * big_n;
  if (sum % denom != 0) throw NonExactDivision("vt_q_size: sum not divisible by q(n + 1)");
  return sum / denom;
}

/// |VT_b(n)| = (1 / (2(n+1))) sum_{d | n+1, d odd} c_d(b) 2^((n+1)/d).
inline BigInt vt_size(std::uint64_t n, const BigInt& b) {
  detail::check_vt_args(n, b);
  const BigInt big_n = BigInt(n) + 1;
  BigInt sum = 0;
  for (const auto& d : divisors(big_n)) {
    if (d % 2 == 0) continue;
    sum += ramanujan_sum(d, b) * pow(BigInt(2), to_u64(big_n / d));
  }
  const BigInt denom = 2 * big_n;
  if (sum % denom != 0) throw NonExactDivision("vt_size: sum not divisible by 2(n + 1)");
  return sum / denom;
}

// ---------------------------------------------------------------------------
// Exact engine
// ---------------------------------------------------------------------------

enum class CrossCheck { off, on };

namespace detail {

inline bool exceeds_subset_count(const BigInt& n, std::size_t k) {
  return k < 64 && n > (BigInt(1) << k);
}

// Gray-code walk over all 2^k tuples keeping the congruence sum mod n.
inline WeightEnumerator enumerate_subsets(const CodeSpec& spec) {
  const std::size_t k = spec.length();
  if (k > kMaxSubsetLength)
    throw CapExceeded("weight_enumerator: k = " + std::to_string(k) + " too long for direct enumeration");
  WeightEnumerator out(k);
  std::vector<std::uint64_t> tally(k + 1, 0);
  const BigInt& modulus = spec.modulus();
  if (modulus < (BigInt(1) << 63)) {
    const std::uint64_t n = modulus.convert_to<std::uint64_t>();
    const std::uint64_t b = spec.residue().convert_to<std::uint64_t>();
    std::vector<std::uint64_t> a;
    for (const auto& c : spec.coefficients()) a.push_back(mod_floor(c, modulus).convert_to<std::uint64_t>());
    std::uint64_t sum = 0;
    std::uint64_t gray = 0;
    unsigned weight = 0;
    if (sum == b) ++tally[0];
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
      const auto j = static_cast<unsigned>(std::countr_zero(i));
      gray ^= std::uint64_t{1} << j;
      if (gray >> j & 1U) {
        sum += a[j];
        if (sum >= n) sum -= n;
        ++weight;
      } else {
        sum = sum >= a[j] ? sum - a[j] : sum + n - a[j];
        --weight;
      }
      if (sum == b) ++tally[weight];
    }
  } else {
    std::vector<BigInt> a;
    for (const auto& c : spec.coefficients()) a.push_back(mod_floor(c, modulus));
    BigInt sum = 0;
    std::uint64_t gray = 0;
    unsigned weight = 0;
    if (sum == spec.residue()) ++tally[0];
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
      const auto j = static_cast<unsigned>(std::countr_zero(i));
      gray ^= std::uint64_t{1} << j;
      if (gray >> j & 1U) {
        sum += a[j];
        if (sum >= modulus) sum -= modulus;
        ++weight;
      } else {
        sum -= a[j];
        if (sum < 0) sum += modulus;
        --weight;
      }
      if (sum == spec.residue()) ++tally[weight];
    }
  }
  for (std::size_t t = 0; t <= k; ++t) out.count(t) = tally[t];
  return out;
}

}  // namespace detail

/// Exact weight enumerator of the BLCC. Uses the residue fold, or a direct
/// 2^k enumeration when the modulus exceeds 2^k. With CrossCheck::on, VT
/// specs are also evaluated through the Ramanujan closed form and any
/// disagreement throws std::logic_error.
inline WeightEnumerator weight_enumerator(const CodeSpec& spec, CrossCheck check = CrossCheck::off) {
  const std::size_t k = spec.length();
  WeightEnumerator result;
  if (detail::exceeds_subset_count(spec.modulus(), k)) {
    result = detail::enumerate_subsets(spec);
  } else {
    const auto table = residue_product(spec.coefficients(), spec.modulus());
    result = WeightEnumerator(k, table.slot(spec.residue().convert_to<std::size_t>()));
  }
  if (check == CrossCheck::on && spec.family() == Family::vt) {
    const auto closed = vt_weight_enumerator_closed(k, spec.residue());
    if (closed != result) throw std::logic_error("weight_enumerator: VT closed form disagrees with the residue fold");
  }
  return result;
}

inline BigInt size(const CodeSpec& spec) { return weight_enumerator(spec).size(); }

// ---------------------------------------------------------------------------
// Float evaluations of the character sums
// ---------------------------------------------------------------------------

struct FloatEnumerator {
  WeightEnumerator enumerator;
  double max_deviation = 0.0;
};

struct FloatCount {
  BigInt value;
  double deviation = 0.0;
};

namespace detail {

inline std::uint64_t loopable_modulus(const BigInt& modulus, const char* who) {
  if (modulus > BigInt(kMaxFloatModulus))
    throw CapExceeded(std::string(who) + ": modulus " + modulus.str() + " too large for the float m-loop");
  return modulus.convert_to<std::uint64_t>();
}

/// e(r / period) for an integer residue r.
inline std::complex<double> unit_root(std::uint64_t r, std::uint64_t period) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(period);
  return std::polar(1.0, angle);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline BigInt round_checked(double x, const char* who) {
  if (!std::isfinite(x) || std::abs(x) > 4503599627370496.0)  // 2^52
    throw IntegralityFailure(std::string(who) + ": value outside exact double range",
                             std::numeric_limits<double>::infinity());
  return BigInt(static_cast<long long>(std::llround(x)));
}

// Phase of e(eta m / n) where eta = -b + (1/2) sum a_j, handled as 2 eta over 2n.
inline std::uint64_t twice_eta_mod(const CodeSpec& spec, std::uint64_t two_n) {
  BigInt twice_eta = -2 * spec.residue();
  for (const auto& a : spec.coefficients()) twice_eta += a;
  return mod_floor(twice_eta, BigInt(two_n)).convert_to<std::uint64_t>();
}

}  // namespace detail

/// Literal (1/n) sum_{m=1}^{n} e(-bm/n) prod_j (1 + z e(a_j m/n)) in complex
/// double arithmetic, rounded coefficient-wise. Throws IntegralityFailure if
/// any coefficient lies more than 1e-6 from a nonnegative integer.
inline FloatEnumerator weight_enumerator_charsum_float(const CodeSpec& spec) {
  const std::uint64_t n = detail::loopable_modulus(spec.modulus(), "weight_enumerator_charsum_float");
  const std::size_t k = spec.length();
  std::vector<std::uint64_t> a;
  for (const auto& c : spec.coefficients()) a.push_back(mod_floor(c, spec.modulus()).convert_to<std::uint64_t>());
  const std::uint64_t b = spec.residue().convert_to<std::uint64_t>();

  std::vector<std::complex<double>> total(k + 1);
  std::vector<std::complex<double>> prod(k + 1);
  for (std::uint64_t m = 1; m <= n; ++m) {
    std::fill(prod.begin(), prod.end(), std::complex<double>{});
    prod[0] = 1.0;
    for (std::size_t j = 0; j < k; ++j) {
      const auto root = detail::unit_root(detail::mul_mod(a[j], m, n), n);
      for (std::size_t w = j + 1; w >= 1; --w) prod[w] += root * prod[w - 1];
    }
    const auto twist = detail::unit_root((n - detail::mul_mod(b, m, n)) % n, n);
    for (std::size_t w = 0; w <= k; ++w) total[w] += twist * prod[w];
  }

  FloatEnumerator out{WeightEnumerator(k), 0.0};
  for (std::size_t w = 0; w <= k; ++w) {
    const auto raw = total[w] / static_cast<double>(n);
    const BigInt rounded = detail::round_checked(raw.real(), "weight_enumerator_charsum_float");
    const double dev = std::hypot(raw.real() - std::round(raw.real()), raw.imag());
    out.max_deviation = std::max(out.max_deviation, dev);
    if (rounded < 0)
      throw IntegralityFailure("weight_enumerator_charsum_float: negative coefficient", out.max_deviation);
    out.enumerator.count(w) = rounded;
  }
  if (out.max_deviation > kIntegralityTolerance)
    throw IntegralityFailure("weight_enumerator_charsum_float: deviation " + std::to_string(out.max_deviation),
                             out.max_deviation);
  return out;
}

/// W(1) = (2^k / n) sum_m e(eta m / n) prod_j cos(pi a_j m / n), eta = -b + (1/2) sum a_j.
/// The tolerance is 1e-6 relative to max(1, |W(1)|).
inline FloatCount size_cosine_float(const CodeSpec& spec) {
  const std::uint64_t n = detail::loopable_modulus(spec.modulus(), "size_cosine_float");
  const std::uint64_t two_n = 2 * n;
  const std::uint64_t eta2 = detail::twice_eta_mod(spec, two_n);
  std::vector<std::uint64_t> a;
  for (const auto& c : spec.coefficients()) a.push_back(mod_floor(c, BigInt(two_n)).convert_to<std::uint64_t>());

  std::complex<double> sum{};
  for (std::uint64_t m = 1; m <= n; ++m) {
    double prod = 1.0;
    for (const auto aj : a)
      prod *= std::cos(std::numbers::pi * static_cast<double>(detail::mul_mod(aj, m, two_n)) / static_cast<double>(n));
    sum += detail::unit_root(detail::mul_mod(eta2, m, two_n), two_n) * prod;
  }
  const auto raw = sum * (std::ldexp(1.0, static_cast<int>(a.size())) / static_cast<double>(n));
  FloatCount out{detail::round_checked(raw.real(), "size_cosine_float"),
                 std::hypot(raw.real() - std::round(raw.real()), raw.imag())};
  const double tolerance = kIntegralityTolerance * std::max(1.0, std::abs(raw.real()));
  if (out.deviation > tolerance || raw.real() < -tolerance)
    throw IntegralityFailure("size_cosine_float: deviation " + std::to_string(out.deviation), out.deviation);
  return out;
}

/// (2^k / n) sum_m prod_j |cos(pi a_j m / n)|, an upper bound on the code size.
inline double size_upper_bound(const CodeSpec& spec) {
  const std::uint64_t n = detail::loopable_modulus(spec.modulus(), "size_upper_bound");
  const std::uint64_t two_n = 2 * n;
  std::vector<std::uint64_t> a;
  for (const auto& c : spec.coefficients()) a.push_back(mod_floor(c, BigInt(two_n)).convert_to<std::uint64_t>());
  double sum = 0.0;
  for (std::uint64_t m = 1; m <= n; ++m) {
    double prod = 1.0;
    for (const auto aj : a)
      prod *= std::abs(std::cos(std::numbers::pi * static_cast<double>(detail::mul_mod(aj, m, two_n)) /
                                static_cast<double>(n)));
    sum += prod;
  }
  return sum * std::ldexp(1.0, static_cast<int>(a.size())) / static_cast<double>(n);
}

// ---------------------------------------------------------------------------
// Lehmer's count over Z_n^k
// ---------------------------------------------------------------------------

/// Number of x in Z_n^k with a.x == b (mod n): l n^(k-1) when l = gcd(a, n) divides b, else 0.
inline BigInt lehmer_count(std::span<const BigInt> coeffs, const BigInt& n, const BigInt& b) {
  if (n < 1) throw std::invalid_argument("lehmer_count: n must be >= 1");
  if (coeffs.empty()) return mod_floor(b, n) == 0 ? 1 : 0;
  BigInt ell = n;
  for (const auto& a : coeffs) ell = gcd(ell, a);
  if (mod_floor(b, ell) != 0) return 0;
  return ell * pow(n, coeffs.size() - 1);
}

inline BigInt lehmer_count(const std::vector<BigInt>& coeffs, const BigInt& n, const BigInt& b) {
  return lehmer_count(std::span<const BigInt>(coeffs), n, b);
}

// ---------------------------------------------------------------------------
// Shifted VT
// ---------------------------------------------------------------------------

struct SvtSizes {
  BigInt even;
  BigInt odd;

  const BigInt& of_parity(int r) const { return r == 0 ? even : odd; }
  friend bool operator==(const SvtSizes&, const SvtSizes&) = default;
};

struct SvtFloatSizes {
  BigInt even;
  BigInt odd;
  double deviation = 0.0;

  const BigInt& of_parity(int r) const { return r == 0 ? even : odd; }
};

/// Even and odd weight counts (W(1) +- W(-1)) / 2 of the base code.
inline SvtSizes svt_sizes(const ParityCodeSpec& spec) {
  const auto w = weight_enumerator(spec.base()).polynomial();
  const BigInt at_one = w.evaluate(BigInt(1));
  const BigInt at_minus_one = w.evaluate(BigInt(-1));
  if ((at_one + at_minus_one) % 2 != 0) throw NonExactDivision("svt_sizes: W(1) + W(-1) is odd");
  return {(at_one + at_minus_one) / 2, (at_one - at_minus_one) / 2};
}

/// Float evaluation of (2^(k-1) / n) sum_m e(eta m / n) (A +- (-1)^k B) with
/// A = prod_j cos(pi a_j m / n) and B = prod_j i sin(pi a_j m / n).
inline SvtFloatSizes svt_sizes_charsum_float(const ParityCodeSpec& spec) {
  const CodeSpec& base = spec.base();
  const std::uint64_t n = detail::loopable_modulus(base.modulus(), "svt_sizes_charsum_float");
  const std::uint64_t two_n = 2 * n;
  const std::uint64_t eta2 = detail::twice_eta_mod(base, two_n);
  const std::size_t k = base.length();
  std::vector<std::uint64_t> a;
  for (const auto& c : base.coefficients()) a.push_back(mod_floor(c, BigInt(two_n)).convert_to<std::uint64_t>());

  const std::complex<double> i_unit{0.0, 1.0};
  std::complex<double> even_sum{};
  std::complex<double> odd_sum{};
  const double k_sign = (k % 2 == 0) ? 1.0 : -1.0;
  for (std::uint64_t m = 1; m <= n; ++m) {
    double cos_prod = 1.0;
    std::complex<double> sin_prod = 1.0;
    for (const auto aj : a) {
      const double angle = std::numbers::pi * static_cast<double>(detail::mul_mod(aj, m, two_n)) / static_cast<double>(n);
      cos_prod *= std::cos(angle);
      sin_prod *= i_unit * std::sin(angle);
    }
    const auto phase = detail::unit_root(detail::mul_mod(eta2, m, two_n), two_n);
    even_sum += phase * (cos_prod + k_sign * sin_prod);
    odd_sum += phase * (cos_prod - k_sign * sin_prod);
  }
  const double scale = std::ldexp(1.0, static_cast<int>(k) - 1) / static_cast<double>(n);
  even_sum *= scale;
  odd_sum *= scale;
  auto dev = [](std::complex<double> z) { return std::hypot(z.real() - std::round(z.real()), z.imag()); };
  SvtFloatSizes out{detail::round_checked(even_sum.real(), "svt_sizes_charsum_float"),
                    detail::round_checked(odd_sum.real(), "svt_sizes_charsum_float"),
                    std::max(dev(even_sum), dev(odd_sum))};
  if (out.deviation > kIntegralityTolerance || out.even < 0 || out.odd < 0)
    throw IntegralityFailure("svt_sizes_charsum_float: deviation " + std::to_string(out.deviation), out.deviation);
  return out;
}

}  // namespace ccodes
