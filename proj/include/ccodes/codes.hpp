#pragma once

// Code families normalized to binary linear congruence codes (BLCC): all
// binary k-tuples c with a_1 c_1 + ... + a_k c_k == b (mod n).

#include "ccodes/bigint.hpp"
#include "ccodes/errors.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ccodes {

enum class Family { generic, vt, levenshtein, helberg };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::generic: return "blcc";
    case Family::vt: return "vt";
    case Family::levenshtein: return "levenshtein";
    case Family::helberg: return "helberg";
  }
  return "blcc";
}

class CodeSpec {
 public:
  /// Generic BLCC. Requires modulus >= 1 and 0 <= residue < modulus.
  CodeSpec(std::vector<BigInt> coefficients, BigInt modulus, BigInt residue, Family family = Family::generic,
           unsigned helberg_depth = 0)
      : coefficients_(std::move(coefficients)),
        modulus_(std::move(modulus)),
        residue_(std::move(residue)),
        family_(family),
        helberg_depth_(helberg_depth) {
    if (modulus_ < 1) throw InvalidSpec("modulus must be >= 1, got " + modulus_.str());
    if (residue_ < 0 || residue_ >= modulus_)
      throw InvalidSpec("residue " + residue_.str() + " out of range [0, " + modulus_.str() + ")");
  }

  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  const BigInt& modulus() const noexcept { return modulus_; }
  const BigInt& residue() const noexcept { return residue_; }
  std::size_t length() const noexcept { return coefficients_.size(); }
  Family family() const noexcept { return family_; }
  /// The recurrence depth s for Helberg codes, 0 otherwise.
  unsigned helberg_depth() const noexcept { return helberg_depth_; }

  /// Same congruence, ignoring the provenance tag.
  bool same_congruence(const CodeSpec& other) const {
    return coefficients_ == other.coefficients_ && modulus_ == other.modulus_ && residue_ == other.residue_;
  }

  CodeSpec with_residue(BigInt residue) const {
    return CodeSpec(coefficients_, modulus_, std::move(residue), family_, helberg_depth_);
  }

  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;

 private:
  std::vector<BigInt> coefficients_;
  BigInt modulus_;
  BigInt residue_;
  Family family_;
  unsigned helberg_depth_;
};

/// A BLCC further restricted to Hamming weight == parity (mod 2).
class ParityCodeSpec {
 public:
  ParityCodeSpec(CodeSpec base, int parity) : base_(std::move(base)), parity_(parity) {
    if (parity_ != 0 && parity_ != 1) throw InvalidSpec("parity must be 0 or 1, got " + std::to_string(parity_));
  }

  const CodeSpec& base() const noexcept { return base_; }
  int parity() const noexcept { return parity_; }

  friend bool operator==(const ParityCodeSpec&, const ParityCodeSpec&) = default;

 private:
  CodeSpec base_;
  int parity_;
};

namespace detail {

inline std::vector<BigInt> iota_coefficients(std::uint64_t k) {
  std::vector<BigInt> out;
  out.reserve(k);
  for (std::uint64_t i = 1; i <= k; ++i) out.emplace_back(i);
  return out;
}

}  // namespace detail

inline CodeSpec make_blcc(std::vector<BigInt> coefficients, BigInt modulus, BigInt residue) {
  return CodeSpec(std::move(coefficients), std::move(modulus), std::move(residue));
}

/// VT_b(n): sum i s_i == b (mod n + 1).
inline CodeSpec make_vt(std::uint64_t n, const BigInt& b) {
  if (n < 1) throw InvalidSpec("vt: n must be >= 1");
  return CodeSpec(detail::iota_coefficients(n), BigInt(n) + 1, b, Family::vt);
}

/// L_b(k, n): sum_{i <= k} i s_i == b (mod n).
inline CodeSpec make_levenshtein(std::uint64_t k, const BigInt& n, const BigInt& b) {
  if (k < 1) throw InvalidSpec("levenshtein: k must be >= 1");
  return CodeSpec(detail::iota_coefficients(k), n, b, Family::levenshtein);
}

/// Multipliers v_1..v_{k+1} of the s-step recurrence v_i = 1 + v_{i-1} + ... + v_{i-s},
/// with v_i = 0 for i <= 0.
inline std::vector<BigInt> helberg_multipliers(std::uint64_t k, unsigned s) {
  if (s < 1) throw InvalidSpec("helberg: s must be >= 1");
  std::vector<BigInt> v;
  v.reserve(k + 1);
  BigInt window = 0;  // v_{i-1} + ... + v_{i-s}
  for (std::uint64_t i = 0; i <= k; ++i) {
    v.push_back(window + 1);
    window += v.back();
    if (i >= s) window -= v[i - s];
  }
  return v;
}

/// H_b(k, s): coefficients v_1..v_k, modulus v_{k+1}.
inline CodeSpec make_helberg(std::uint64_t k, unsigned s, const BigInt& b) {
  if (k < 1) throw InvalidSpec("helberg: k must be >= 1");
  auto v = helberg_multipliers(k, s);
  BigInt modulus = std::move(v.back());
  v.pop_back();
  return CodeSpec(std::move(v), std::move(modulus), b, Family::helberg, s);
}

/// SVT_{b,r}(k, n): L_b(k, n) intersected with weight parity r.
inline ParityCodeSpec make_svt(std::uint64_t k, const BigInt& n, const BigInt& b, int r) {
  return ParityCodeSpec(make_levenshtein(k, n, b), r);
}

}  // namespace ccodes
