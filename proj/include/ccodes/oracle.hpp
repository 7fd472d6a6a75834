#pragma once

// Exhaustive ground truth. Nothing here shares code paths with the residue
// fold or the closed forms: every tuple is visited and its congruence sum
// is tested literally.

#include "ccodes/bigint.hpp"
#include "ccodes/codes.hpp"
#include "ccodes/enumerator.hpp"
#include "ccodes/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ccodes::oracle {

inline constexpr std::size_t kMaxBinaryLength = 30;
inline constexpr std::uint64_t kMaxTupleCount = 10'000'000;
inline constexpr std::size_t kMaxDeletionLength = 16;

/// A set of distinct binary words of length k; bit i - 1 holds s_i.
class Codebook {
 public:
  Codebook(std::size_t k, std::vector<std::uint64_t> words) : k_(k), words_(std::move(words)) {
    if (k_ > 63) throw std::invalid_argument("Codebook: k must be <= 63");
    const std::uint64_t limit = std::uint64_t{1} << k_;
    std::vector<std::uint64_t> sorted = words_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("Codebook: duplicate word");
    if (!sorted.empty() && sorted.back() >= limit) throw std::invalid_argument("Codebook: word longer than k");
  }

  std::size_t length() const noexcept { return k_; }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::size_t k_;
  std::vector<std::uint64_t> words_;
};

namespace detail {

inline void require_binary_cap(std::size_t k, const char* who) {
  if (k > kMaxBinaryLength)
    throw CapExceeded(std::string(who) + ": k = " + std::to_string(k) + " exceeds the oracle cap of " +
                      std::to_string(kMaxBinaryLength));
}

inline bool all_fit_i64(const CodeSpec& spec) {
  const BigInt lo(std::numeric_limits<std::int64_t>::min());
  const BigInt hi(std::numeric_limits<std::int64_t>::max());
  auto ok = [&](const BigInt& x) { return x >= lo && x <= hi; };
  return ok(spec.modulus()) && std::all_of(spec.coefficients().begin(), spec.coefficients().end(), ok);
}

// Lexicographic walk over {0,1}^k. Visit receives (bits, weight, raw sum);
// the sum is never reduced, so the congruence test stays literal.
template <class Sum, class Visit>
void walk_binary(const std::vector<Sum>& a, Visit&& visit) {
  const std::size_t k = a.size();
  std::vector<bool> bits(k, false);
  Sum sum = 0;
  unsigned weight = 0;
  std::uint64_t word = 0;
  visit(word, weight, sum);
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t step = 1; step < total; ++step) {
    std::size_t j = 0;
    while (bits[j]) {
      bits[j] = false;
      sum -= a[j];
      --weight;
      ++j;
    }
    bits[j] = true;
    sum += a[j];
    ++weight;
    word = step;
    visit(word, weight, sum);
  }
}

// Calls visit(word, weight) for every codeword of spec.
template <class Visit>
void for_each_codeword(const CodeSpec& spec, Visit&& visit) {
  if (all_fit_i64(spec)) {
    std::vector<__int128> a;
    for (const auto& c : spec.coefficients()) a.push_back(c.convert_to<std::int64_t>());
    const auto n = static_cast<__int128>(spec.modulus().convert_to<std::int64_t>());
    const auto b = static_cast<__int128>(spec.residue().convert_to<std::int64_t>());
    walk_binary(a, [&](std::uint64_t word, unsigned weight, __int128 sum) {
      if ((sum - b) % n == 0) visit(word, weight);
    });
  } else {
    walk_binary(spec.coefficients(), [&](std::uint64_t word, unsigned weight, const BigInt& sum) {
      if ((sum - spec.residue()) % spec.modulus() == 0) visit(word, weight);
    });
  }
}

inline std::uint64_t checked_power(std::uint64_t base, std::size_t exponent, const char* who) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > kMaxTupleCount / base)
      throw CapExceeded(std::string(who) + ": search space exceeds " + std::to_string(kMaxTupleCount) + " tuples");
    result *= base;
  }
  return result;
}

// Counts x in Z_q^k with coeffs . x == b (mod n) by an odometer over Z_q^k.
inline BigInt count_tuples(std::span<const BigInt> coeffs, const BigInt& n, const BigInt& b, std::uint64_t q,
                           const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  if (q < 1) throw std::invalid_argument(std::string(who) + ": q must be >= 1");
  const std::size_t k = coeffs.size();
  const std::uint64_t total = checked_power(q, k, who);
  std::vector<BigInt> a(coeffs.begin(), coeffs.end());
  std::vector<std::uint64_t> digits(k, 0);
  BigInt sum = 0;
  std::uint64_t hits = 0;
  for (std::uint64_t step = 0; step < total; ++step) {
    if ((sum - b) % n == 0) ++hits;
    for (std::size_t j = 0; j < k; ++j) {
      if (digits[j] + 1 < q) {
        ++digits[j];
        sum += a[j];
        break;
      }
      sum -= a[j] * static_cast<std::uint64_t>(digits[j]);
      digits[j] = 0;
    }
  }
  return hits;
}

}  // namespace detail

/// Tallies all 2^k binary tuples satisfying the congruence by Hamming weight.
inline WeightEnumerator brute_weight_enumerator(const CodeSpec& spec) {
  const std::size_t k = spec.length();
  detail::require_binary_cap(k, "brute_weight_enumerator");
  std::vector<std::uint64_t> tally(k + 1, 0);
  detail::for_each_codeword(spec, [&](std::uint64_t, unsigned weight) { ++tally[weight]; });
  WeightEnumerator out(k);
  for (std::size_t t = 0; t <= k; ++t) out.count(t) = tally[t];
  return out;
}

/// Even and odd weight codeword counts of the base code, tallied directly.
inline SvtSizes brute_svt_sizes(const ParityCodeSpec& spec) {
  detail::require_binary_cap(spec.base().length(), "brute_svt_sizes");
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
  detail::for_each_codeword(spec.base(), [&](std::uint64_t, unsigned weight) { ++(weight % 2 == 0 ? even : odd); });
  return {BigInt(even), BigInt(odd)};
}

/// Materializes every codeword of the BLCC.
inline Codebook codebook(const CodeSpec& spec) {
  detail::require_binary_cap(spec.length(), "codebook");
  std::vector<std::uint64_t> words;
  detail::for_each_codeword(spec, [&](std::uint64_t word, unsigned) { words.push_back(word); });
  return Codebook(spec.length(), std::move(words));
}

/// Solutions of coeffs . x == b (mod n) with x in Z_n^k. Capped at n^k <= 10^7.
inline BigInt brute_count_zn(std::span<const BigInt> coeffs, const BigInt& n, const BigInt& b) {
  if (!fits_u64(n)) throw CapExceeded("brute_count_zn: modulus too large");
  return detail::count_tuples(coeffs, n, b, n.convert_to<std::uint64_t>(), "brute_count_zn");
}

inline BigInt brute_count_zn(const std::vector<BigInt>& coeffs, const BigInt& n, const BigInt& b) {
  return brute_count_zn(std::span<const BigInt>(coeffs), n, b);
}

/// Solutions with x in Z_q^k. Capped at q^k <= 10^7.
inline BigInt brute_count_qary(std::span<const BigInt> coeffs, const BigInt& n, const BigInt& b, std::uint64_t q) {
  return detail::count_tuples(coeffs, n, b, q, "brute_count_qary");
}

inline BigInt brute_count_qary(const std::vector<BigInt>& coeffs, const BigInt& n, const BigInt& b,
                               std::uint64_t q) {
  return brute_count_qary(std::span<const BigInt>(coeffs), n, b, q);
}

/// True iff the single-deletion balls of distinct codewords are pairwise disjoint.
inline bool check_single_deletion(const Codebook& book) {
  const std::size_t k = book.length();
  if (k > kMaxDeletionLength)
    throw CapExceeded("check_single_deletion: k = " + std::to_string(k) + " exceeds " +
                      std::to_string(kMaxDeletionLength));
  if (k == 0) return book.size() <= 1;
  // All subsequences share length k - 1, so the packed value identifies them.
  std::unordered_map<std::uint64_t, std::size_t> owner;
  owner.reserve(book.size() * k);
  for (std::size_t idx = 0; idx < book.size(); ++idx) {
    const std::uint64_t w = book.words()[idx];
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t low = w & ((std::uint64_t{1} << i) - 1);
      const std::uint64_t high = (w >> (i + 1)) << i;
      const auto [it, inserted] = owner.emplace(low | high, idx);
      if (!inserted && it->second != idx) return false;
    }
  }
  return true;
}

}  // namespace ccodes::oracle
