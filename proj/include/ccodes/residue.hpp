#pragma once

// Group-ring realization of the character-sum weight enumerator.
//
// Each coefficient a_j contributes the factor (1 + z x^{a_j}) in Z[z][Z_n],
// where x is the generator of the cyclic group Z_n. Reading off the
// coefficient of x^b in the product is the discrete Fourier inverse of
// (1/n) sum_m e(-bm/n) prod_j (1 + z e(a_j m/n)), so slot b is exactly the
// weight enumerator of the congruence a.c == b (mod n) over binary c.

#include "ccodes/bigint.hpp"
#include "ccodes/errors.hpp"
#include "ccodes/polynomial.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ccodes {

/// Upper bound on modulus * (k + 1) accumulator cells for the exact fold.
inline constexpr std::uint64_t kMaxResidueCells = std::uint64_t{1} << 26;

class ResiduePolynomial {
 public:
  ResiduePolynomial(BigInt modulus, std::vector<IntPolynomial> slots)
      : modulus_(std::move(modulus)), slots_(std::move(slots)) {
    if (modulus_ < 1) throw std::invalid_argument("ResiduePolynomial: modulus must be positive");
    if (BigInt(slots_.size()) != modulus_) throw std::invalid_argument("ResiduePolynomial: slot count != modulus");
  }

  const BigInt& modulus() const noexcept { return modulus_; }
  std::size_t slot_count() const noexcept { return slots_.size(); }
  const IntPolynomial& slot(std::size_t r) const { return slots_.at(r); }
  const std::vector<IntPolynomial>& slots() const noexcept { return slots_; }

  /// Sum over all slots of the slot polynomial at z = 1; equals 2^k after k folds.
  BigInt total_at_one() const {
    BigInt total = 0;
    for (const auto& s : slots_) total += s.evaluate(BigInt(1));
    return total;
  }

  friend bool operator==(const ResiduePolynomial&, const ResiduePolynomial&) = default;

 private:
  BigInt modulus_;
  std::vector<IntPolynomial> slots_;
};

namespace detail {

// Dense fold over a row-major (modulus x (k+1)) table of counts.
template <class Count>
std::vector<IntPolynomial> fold_residues(std::span<const std::uint64_t> shifts, std::uint64_t n) {
  const std::size_t k = shifts.size();
  const std::size_t width = k + 1;
  std::vector<Count> cur(n * width, Count(0));
  cur[0] = Count(1);
  std::vector<Count> next;
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint64_t a = shifts[j];
    next = cur;
    for (std::uint64_t r = 0; r < n; ++r) {
      const std::uint64_t src = (r + n - a) % n;
      const Count* from = &cur[src * width];
      Count* to = &next[r * width];
      for (std::size_t w = 0; w <= j; ++w) to[w + 1] += from[w];
    }
    cur.swap(next);
  }
  std::vector<IntPolynomial> slots;
  slots.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r) {
    std::vector<BigInt> c(width);
    for (std::size_t w = 0; w < width; ++w) c[w] = BigInt(cur[r * width + w]);
    slots.emplace_back(std::move(c));
  }
  return slots;
}

}  // namespace detail

/// Folds every coefficient into the residue table: starting from slot 0 = 1,
/// each a_j updates slot[r] <- slot[r] + z * slot[(r - a_j) mod n].
/// Coefficients may be negative or exceed n; they are reduced first.
inline ResiduePolynomial residue_product(std::span<const BigInt> coeffs, const BigInt& modulus) {
  if (modulus < 1) throw std::invalid_argument("residue_product: modulus must be positive");
  const std::uint64_t k = coeffs.size();
  if (!fits_u64(modulus) || modulus > BigInt(kMaxResidueCells / (k + 1)))
    throw CapExceeded("residue_product: modulus " + modulus.str() + " with k = " + std::to_string(k) +
                      " exceeds the residue table cap");
  const std::uint64_t n = modulus.convert_to<std::uint64_t>();
  std::vector<std::uint64_t> shifts;
  shifts.reserve(k);
  for (const auto& a : coeffs) shifts.push_back(mod_floor(a, modulus).convert_to<std::uint64_t>());

  // Counts are bounded by 2^k, so machine words suffice below 64 folds.
  auto slots = k < 64 ? detail::fold_residues<std::uint64_t>(shifts, n) : detail::fold_residues<BigInt>(shifts, n);
  return ResiduePolynomial(modulus, std::move(slots));
}

inline ResiduePolynomial residue_product(const std::vector<BigInt>& coeffs, const BigInt& modulus) {
  return residue_product(std::span<const BigInt>(coeffs), modulus);
}

}  // namespace ccodes
