#include "ccodes/codes.hpp"

#include <gtest/gtest.h>

namespace ccodes {
namespace {

std::vector<BigInt> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

TEST(MakeVt, Examples) {
  const auto vt = make_vt(4, 0);
  EXPECT_EQ(vt.coefficients(), ints({1, 2, 3, 4}));
  EXPECT_EQ(vt.modulus(), 5);
  EXPECT_EQ(vt.residue(), 0);
  EXPECT_EQ(vt.family(), Family::vt);

  const auto one = make_vt(1, 1);
  EXPECT_EQ(one.coefficients(), ints({1}));
  EXPECT_EQ(one.modulus(), 2);
  EXPECT_EQ(one.residue(), 1);

  EXPECT_THROW(make_vt(4, 5), InvalidSpec);
  EXPECT_THROW(make_vt(0, 0), InvalidSpec);
}

TEST(MakeVt, CoefficientsAreOneThroughN) {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const auto vt = make_vt(n, 0);
    ASSERT_EQ(vt.length(), n);
    for (std::uint64_t i = 0; i < n; ++i) ASSERT_EQ(vt.coefficients()[i], i + 1);
  }
}

TEST(MakeLevenshtein, Examples) {
  EXPECT_TRUE(make_levenshtein(4, 5, 0).same_congruence(make_vt(4, 0)));
  const auto l = make_levenshtein(3, 7, 2);
  EXPECT_EQ(l.coefficients(), ints({1, 2, 3}));
  EXPECT_EQ(l.modulus(), 7);
  EXPECT_EQ(l.residue(), 2);
  const auto degenerate = make_levenshtein(2, 1, 0);
  EXPECT_EQ(degenerate.modulus(), 1);
  EXPECT_THROW(make_levenshtein(3, 7, 7), InvalidSpec);
  EXPECT_THROW(make_levenshtein(3, 7, -1), InvalidSpec);
  EXPECT_THROW(make_levenshtein(3, 0, 0), InvalidSpec);
}

TEST(MakeHelberg, Examples) {
  const auto h = make_helberg(4, 1, 0);
  EXPECT_EQ(h.coefficients(), ints({1, 2, 3, 4}));
  EXPECT_EQ(h.modulus(), 5);
  EXPECT_EQ(h.helberg_depth(), 1U);

  const auto h2 = make_helberg(3, 2, 0);
  EXPECT_EQ(h2.coefficients(), ints({1, 2, 4}));
  EXPECT_EQ(h2.modulus(), 7);

  const auto h3 = make_helberg(1, 3, 0);
  EXPECT_EQ(h3.coefficients(), ints({1}));
  EXPECT_EQ(h3.modulus(), 2);

  EXPECT_THROW(make_helberg(3, 2, 7), InvalidSpec);
  EXPECT_THROW(make_helberg(3, 0, 0), InvalidSpec);
}

TEST(MakeHelberg, DepthOneIsVt) {
  for (std::uint64_t k = 1; k <= 20; ++k)
    for (std::uint64_t b = 0; b <= k; ++b) ASSERT_TRUE(make_helberg(k, 1, b).same_congruence(make_vt(k, b)));
}

TEST(MakeHelberg, MultipliersStrictlyIncrease) {
  for (unsigned s = 1; s <= 6; ++s) {
    const auto v = helberg_multipliers(60, s);
    ASSERT_EQ(v.size(), 61U);
    for (std::size_t i = 1; i < v.size(); ++i) ASSERT_LT(v[i - 1], v[i]) << "s=" << s << " i=" << i;
  }
}

TEST(MakeHelberg, RecurrenceAgainstDefinition) {
  for (unsigned s = 1; s <= 5; ++s) {
    const auto v = helberg_multipliers(25, s);
    for (std::size_t i = 0; i < v.size(); ++i) {
      BigInt expected = 1;
      for (unsigned j = 1; j <= s; ++j)
        if (i >= j) expected += v[i - j];
      ASSERT_EQ(v[i], expected);
    }
  }
  // Large k needs more than 64 bits when s >= 2.
  EXPECT_GT(helberg_multipliers(100, 2).back(), BigInt(1) << 64);
}

TEST(MakeSvt, Examples) {
  const auto even = make_svt(4, 5, 0, 0);
  EXPECT_TRUE(even.base().same_congruence(make_levenshtein(4, 5, 0)));
  EXPECT_EQ(even.parity(), 0);
  EXPECT_EQ(make_svt(4, 5, 0, 1).parity(), 1);
  const auto s = make_svt(3, 4, 1, 0);
  EXPECT_EQ(s.base().coefficients(), ints({1, 2, 3}));
  EXPECT_EQ(s.base().modulus(), 4);
  EXPECT_EQ(s.base().residue(), 1);
  EXPECT_THROW(make_svt(3, 4, 1, 2), InvalidSpec);
  EXPECT_THROW(make_svt(3, 4, 4, 0), InvalidSpec);
}

TEST(CodeSpec, Validation) {
  EXPECT_THROW(make_blcc(ints({1}), 0, 0), InvalidSpec);
  EXPECT_THROW(make_blcc(ints({1}), 5, 5), InvalidSpec);
  EXPECT_NO_THROW(make_blcc({}, 1, 0));
  EXPECT_NO_THROW(make_blcc(ints({-3, 400}), 7, 6));
}

}  // namespace
}  // namespace ccodes
