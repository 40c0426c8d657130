#include <gtest/gtest.h>

#include "adic/error.hpp"
#include "adic/morse.hpp"
#include "adic/morse_arith.hpp"
#include "adic/random.hpp"
#include "oracles.hpp"

using namespace adic;

TEST(MorseArith, AValues) {
  const int expected[] = {0, 0, 1, 2, 5, 10, 21, 42, 85};
  for (unsigned r = 0; r < 9; ++r) EXPECT_EQ(a_of(r), expected[r]) << r;
  for (unsigned r = 2; r <= 64; ++r) {
    // a_r + a_(r-1) = 2^(r-1) - 1
    EXPECT_EQ(a_of(r) + a_of(r - 1), oracle::pow2(r - 1) - 1) << r;
  }
}

TEST(MorseArith, TableRows) {
  struct Row {
    int n, m;
    unsigned r;
    Bit pair;
    int theta;
  };
  const Row rows[] = {{0, 1, 2, 0, 1},  {1, 3, 3, 0, 2},   {2, 7, 4, 0, 5},   {3, 2, 2, 1, -1},
                      {5, 15, 5, 0, 10}, {6, 4, 3, 1, -2}, {10, 31, 6, 0, 21}, {13, 8, 4, 1, -5}};
  for (const Row& row : rows) {
    const EpSeq x = from_integer(row.n);
    EXPECT_EQ(classify(x), (CaseTag{row.r, row.pair})) << row.n;
    EXPECT_EQ(residue_case(row.n), (CaseTag{row.r, row.pair})) << row.n;
    EXPECT_EQ(theta(x), row.theta) << row.n;
    EXPECT_EQ(morse_int(row.n), row.m) << row.n;
  }
}

TEST(MorseArith, ResidueRouteMatchesWindowRule) {
  for (int n = -20000; n < 20000; ++n) {
    ASSERT_EQ(morse_int(n), oracle::morse_integer(n)) << n;
  }
}

TEST(MorseArith, ResidueCaseMatchesDigits) {
  for (int n = 0; n < 20000; ++n) {
    ASSERT_EQ(residue_case(n), classify(from_integer(n))) << n;
  }
}

TEST(MorseArith, TimeChange) {
  Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    const EpSeq x = random_non_max_ep_seq(rng);
    EXPECT_TRUE(time_change_check(x)) << x.to_string();
    // Also through the residue oracle.
    const BigInt step = theta(x);
    const Digits moved = morse_successor(x).prefix(80);
    const BigInt lhs = oracle::value_of(moved);
    const BigInt rhs = oracle::mod_pow2(oracle::value_of(x.prefix(80)) + step, 80);
    EXPECT_EQ(lhs, rhs) << x.to_string();
  }
}

TEST(MorseArith, MaxPointRejected) {
  for (const char* s : {"(01)", "(10)"}) {
    try {
      (void)theta(EpSeq::parse(s));
      FAIL() << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::max_point);
    }
  }
}

TEST(MorseArith, LevelCountsByEnumeration) {
  for (unsigned m = 2; m <= 14; ++m) {
    std::vector<std::uint64_t> counts(m, 0);
    std::uint64_t alternating = 0;
    for (std::uint64_t n = 0; n < (1ULL << m); ++n) {
      unsigned k = 1;
      while (k < m && ((n >> (k - 1)) & 1) != ((n >> k) & 1)) ++k;
      if (k == m) ++alternating;
      else ++counts[k];
    }
    const ThetaLevelCounts got = theta_level_counts(m);
    for (unsigned k = 1; k < m; ++k) {
      EXPECT_EQ(got.counts[k], counts[k]) << m << " " << k;
      EXPECT_EQ(got.counts[k], 1ULL << (m - k)) << m << " " << k;
    }
    EXPECT_EQ(got.alternating, alternating);
    EXPECT_EQ(alternating, 2u);
  }
}

TEST(MorseArith, FlipLaw) {
  for (int n = 0; n < 4000; ++n) {
    EXPECT_EQ(morse_int(-n - 1), -morse_int(n) - 1) << n;
  }
}
