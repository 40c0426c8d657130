#include <gtest/gtest.h>

#include "adic/error.hpp"
#include "adic/random.hpp"
#include "adic/substitution.hpp"
#include "oracles.hpp"

using namespace adic;

namespace {

Word w(const char* s) { return Word::parse(s); }

}  // namespace

TEST(Substitution, Zeta) {
  EXPECT_EQ(zeta(w("0")), w("01"));
  EXPECT_EQ(zeta(w("1")), w("10"));
  EXPECT_EQ(zeta(w("0110")), w("01101001"));
  EXPECT_EQ(zeta(Word{}), Word{});
}

TEST(Substitution, ThueMorsePrefix) {
  EXPECT_EQ(thue_morse_prefix(16).to_string(), "0110100110010110");
  const Word u = thue_morse_prefix(5000);
  for (std::size_t n = 0; n < u.size(); ++n) ASSERT_EQ(u[n], oracle::digit_sum_parity(n)) << n;
  EXPECT_EQ(zeta(u.slice(0, 1000)), u.slice(0, 2000));
  EXPECT_EQ(thue_morse_prefix(0).size(), 0u);
  EXPECT_EQ(thue_morse_prefix(7).to_string(), "0110100");
}

TEST(Substitution, DerivativeFixedPoint) {
  EXPECT_TRUE(derivative_fixed_point_prefix(10).to_string() == "1011101010");
  const Word u = thue_morse_prefix(4097);
  EXPECT_EQ(word_difference(u), derivative_fixed_point_prefix(4096));
}

TEST(Substitution, FactorsMatchSubstringSearch) {
  Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    const std::size_t len = 1 + uniform_below(rng, 9);
    std::string s;
    for (std::size_t j = 0; j < len; ++j) s.push_back(static_cast<char>('0' + uniform_below(rng, 2)));
    EXPECT_EQ(is_factor(Word::parse(s)), oracle::occurs_in_thue_morse(s, 4096)) << s;
  }
  EXPECT_FALSE(is_factor(w("000")));
  EXPECT_FALSE(is_factor(w("11111")));
  EXPECT_FALSE(is_factor(w("01010")));
  EXPECT_TRUE(is_factor(w("0101")));
  EXPECT_TRUE(is_factor(w("")));
}

TEST(Substitution, CodingOfZeroIsThueMorse) {
  const CodingWindow c = coding(EpSeq::constant(0), 0, 511);
  EXPECT_EQ(c.bits, thue_morse_prefix(512));
  const std::vector<Bit> orbit = oracle::morse_orbit_first_digits(512);
  EXPECT_EQ(c.bits.bits(), Digits(orbit.begin(), orbit.end()));
}

TEST(Substitution, NegativeCodingNeedsExtension) {
  try {
    (void)coding(EpSeq::constant(0), -4, -1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::min_point);
  }
  const CodingWindow c = coding(EpSeq::constant(0), -4, 3, Extension::on);
  EXPECT_EQ(c.to_string(), "1001.0110");
  const CodingWindow left = coding(EpSeq::constant(0), -64, -1, Extension::on);
  EXPECT_EQ(left.bits, thue_morse_prefix(64).flipped().reversed());
}

TEST(Substitution, CodingShiftsAlongTheOrbit) {
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    const EpSeq x = random_generic_ep_seq(rng);
    const CodingWindow a = coding(x, -8, 24);
    const CodingWindow b = coding(morse_successor(x), -9, 23);
    EXPECT_EQ(a.bits, b.bits) << x.to_string();
    EXPECT_TRUE(is_factor(a.bits)) << x.to_string();
  }
}

TEST(Substitution, DesubstitutionOfCodings) {
  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const EpSeq x = random_generic_ep_seq(rng);
    const CodingWindow c = coding(x, -16, 31);
    const Desubstitution d = desubstitute(c);
    // Blocks begin where x_0 = x_1 holds on the orbit.
    EXPECT_EQ(d.offset, x.digit(0) == x.digit(1) ? 0 : 1) << x.to_string();
    const CodingWindow expected = coding(shift_drop(x), d.preimage.lo, d.preimage.hi);
    EXPECT_EQ(d.preimage, expected) << x.to_string();
  }
}

TEST(Substitution, DesubstitutionErrors) {
  try {
    (void)desubstitute(CodingWindow{0, 3, w("0101")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ambiguous_window);
  }
  try {
    (void)desubstitute(CodingWindow{0, 6, w("0011000")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_a_factor);
  }
  const Desubstitution d = desubstitute(CodingWindow{0, 7, w("01101001")});
  EXPECT_EQ(d.offset, 0);
  EXPECT_EQ(d.preimage.bits, w("0110"));
}
