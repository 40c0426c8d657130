#include "adic/morse_arith.hpp"

#include <bit>

#include "adic/error.hpp"
#include "adic/morse.hpp"

namespace adic {

BigInt a_of(unsigned r) {
  BigInt p = 1;
  p <<= r;
  return (r % 2 == 0) ? BigInt((p - 1) / 3) : BigInt((p - 2) / 3);
}

CaseTag classify(const EpSeq& x) {
  if (is_max(x)) throw Error(ErrorKind::max_point, x.to_string() + " has no first pair");
  const std::size_t k = first_pair_index(x);
  return {static_cast<unsigned>(k + 1), x.digit(k)};
}

CaseTag residue_case(const BigInt& n) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "residue_case needs n >= 0");
  for (unsigned r = 2;; ++r) {
    BigInt modulus = 1;
    modulus <<= r;
    const BigInt residue = n % modulus;
    if (residue == a_of(r - 1)) return {r, 0};
    if (residue == modulus / 2 + a_of(r)) return {r, 1};
  }
}

BigInt theta(const EpSeq& x) {
  const CaseTag c = classify(x);
  BigInt a = a_of(c.r);
  return c.pair_value == 0 ? a : BigInt(-a);
}

BigInt morse_int(const BigInt& n) {
  if (n < 0) return -morse_int(-n - 1) - 1;
  const CaseTag c = residue_case(n);
  return c.pair_value == 0 ? BigInt(n + a_of(c.r)) : BigInt(n - a_of(c.r));
}

bool time_change_check(const EpSeq& x) {
  const BigInt t = theta(x);
  return morse_successor(x) == add(x, from_integer(t));
}

ThetaLevelCounts theta_level_counts(unsigned m) {
  if (m < 1 || m > 24) throw Error(ErrorKind::invalid_argument, "theta_level_counts needs 1 <= m <= 24");
  ThetaLevelCounts out;
  out.counts.assign(m, 0);
  // Bit i of n ^ (n >> 1) is x_i XOR x_(i+1); only pairs inside the prefix
  // (i <= m - 2) count.
  const std::uint32_t pair_mask = (std::uint32_t{1} << (m - 1)) - 1;
  const std::uint32_t total = std::uint32_t{1} << m;
  for (std::uint32_t n = 0; n < total; ++n) {
    const std::uint32_t change = (n ^ (n >> 1)) & pair_mask;
    if (change == pair_mask) {
      ++out.alternating;
      continue;
    }
    const auto k = static_cast<std::size_t>(std::countr_one(change)) + 1;
    ++out.counts[k];
  }
  return out;
}

}  // namespace adic
