#include <gtest/gtest.h>

#include "adic/error.hpp"
#include "adic/ep_seq.hpp"
#include "adic/random.hpp"
#include "oracles.hpp"

using namespace adic;

namespace {

constexpr unsigned kWindow = 96;

Digits prefix_of(const EpSeq& x) { return x.prefix(kWindow); }

EpSeq lit(const char* s) { return EpSeq::parse(s); }

}  // namespace

TEST(EpSeq, CanonicalForm) {
  EXPECT_EQ(lit("0(00)").to_string(), "(0)");
  EXPECT_EQ(lit("01(0101)").to_string(), "(01)");
  EXPECT_EQ(lit("0(10)").to_string(), "(01)");
  EXPECT_EQ(lit("110(10)").to_string(), "1(10)");
  EXPECT_EQ(lit("(0)"), EpSeq::constant(0));
  EXPECT_EQ(lit("1(0)").preperiod_length(), 1u);
  EXPECT_EQ(lit("1(0)").period_length(), 1u);
}

TEST(EpSeq, ParseRejectsMalformed) {
  for (const char* bad : {"", "01", "()", "0(2)", "(01", "0)1(", "1(0)1"}) {
    try {
      (void)EpSeq::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::parse) << bad;
    }
  }
}

TEST(EpSeq, IntegersMatchResidues) {
  for (int n = -300; n <= 300; ++n) {
    EXPECT_EQ(prefix_of(from_integer(n)), oracle::digits_of(n, 1, kWindow)) << n;
  }
  EXPECT_EQ(from_integer(-1).to_string(), "(1)");
  EXPECT_EQ(from_integer(6).to_string(), "011(0)");
}

TEST(EpSeq, RationalsMatchModularInverse) {
  for (int q = 1; q <= 45; q += 2) {
    for (int p = -50; p <= 50; ++p) {
      const EpSeq x = from_rational(p, q);
      ASSERT_EQ(prefix_of(x), oracle::digits_of(p, q, kWindow)) << p << "/" << q;
      const OddFraction back = to_rational(x);
      EXPECT_EQ(back.num * q, BigInt(p) * back.den) << p << "/" << q;
    }
  }
  EXPECT_EQ(from_rational(1, 3).to_string(), "1(10)");
  EXPECT_EQ(from_rational(-1, 3).to_string(), "(10)");
}

TEST(EpSeq, EvenDenominatorRejected) {
  try {
    (void)from_rational(1, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::even_denominator);
  }
}

TEST(EpSeq, ParsePointForms) {
  EXPECT_EQ(parse_point("1(10)"), from_rational(1, 3));
  EXPECT_EQ(parse_point("-7"), from_integer(-7));
  EXPECT_EQ(parse_point("2/5"), from_rational(2, 5));
  EXPECT_EQ(parse_point("4/6"), from_rational(2, 3));
}

TEST(EpSeq, ArithmeticMatchesResidues) {
  Rng rng(7);
  for (int i = 0; i < 400; ++i) {
    const EpSeq x = random_ep_seq(rng);
    const EpSeq y = random_ep_seq(rng);
    const BigInt rx = oracle::value_of(prefix_of(x));
    const BigInt ry = oracle::value_of(prefix_of(y));
    auto digits = [](const BigInt& v) { return oracle::low_digits(oracle::mod_pow2(v, kWindow), kWindow); };
    ASSERT_EQ(prefix_of(add(x, y)), digits(rx + ry)) << x.to_string() << " + " << y.to_string();
    ASSERT_EQ(prefix_of(negate(x)), digits(-rx)) << x.to_string();
    ASSERT_EQ(prefix_of(add_one(x)), digits(rx + 1)) << x.to_string();
    ASSERT_EQ(prefix_of(subtract_one(x)), digits(rx - 1)) << x.to_string();
    ASSERT_EQ(prefix_of(flip(x)), digits(-rx - 1)) << x.to_string();
    ASSERT_EQ(prefix_of(doubled(x)), digits(2 * rx)) << x.to_string();
  }
}

TEST(EpSeq, DifferenceAndIntegral) {
  Rng rng(11);
  for (int i = 0; i < 400; ++i) {
    const EpSeq x = random_ep_seq(rng);
    const EpSeq dx = differentiate(x);
    for (std::size_t j = 0; j < kWindow; ++j) {
      ASSERT_EQ(dx.digit(j), x.digit(j) ^ x.digit(j + 1)) << x.to_string();
    }
    EXPECT_EQ(differentiate(flip(x)), dx);
    EXPECT_EQ(integrate(dx, x.digit(0)), x);
    EXPECT_EQ(integrate(dx, x.digit(0) ^ 1), flip(x));
  }
  EXPECT_EQ(integrate(lit("(1)"), 0).to_string(), "(01)");
}

TEST(EpSeq, ShiftDrop) {
  EXPECT_EQ(shift_drop(lit("101(0)")).to_string(), "01(0)");
  EXPECT_EQ(shift_drop(lit("(10)")).to_string(), "(01)");
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const EpSeq x = random_ep_seq(rng);
    EXPECT_EQ(shift_drop(doubled(x)), x);
  }
}

TEST(EpSeq, FirstPairIndexByScan) {
  Rng rng(5);
  for (int i = 0; i < 400; ++i) {
    const EpSeq x = random_ep_seq(rng);
    std::size_t k = 0;
    for (; k < 200 && x.digit(k) != x.digit(k + 1); ++k) {}
    if (k == 200) {
      EXPECT_TRUE(is_max(x));
      EXPECT_THROW((void)first_pair_index(x), Error);
    } else {
      EXPECT_EQ(first_pair_index(x), k + 1) << x.to_string();
    }
  }
}

TEST(EpSeq, Predicates) {
  EXPECT_TRUE(is_max(lit("(01)")));
  EXPECT_TRUE(is_max(lit("(10)")));
  EXPECT_FALSE(is_max(lit("1(10)")));
  EXPECT_TRUE(is_min(lit("(1)")));
  EXPECT_FALSE(is_min(lit("0(1)")));
  EXPECT_TRUE(is_eventually_constant(lit("0101(1)")));
  EXPECT_TRUE(is_eventually_alternating(lit("0(01)")));
  EXPECT_FALSE(is_eventually_alternating(lit("(011)")));
  EXPECT_TRUE(is_cofinal(lit("11(0)"), lit("0101(0)")));
  EXPECT_FALSE(is_cofinal(lit("(0)"), lit("(1)")));
  EXPECT_TRUE(is_cofinal(lit("1(01)"), lit("(10)")));
}
