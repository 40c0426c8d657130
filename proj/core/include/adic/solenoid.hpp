#pragma once

// Two-sided binary sequences as a symbolic model of the 2-solenoid, and the
// extensions of the odometer, shift, differentiation and Morse map to it.

#include <cstdint>
#include <string>
#include <string_view>

#include "adic/bigint.hpp"
#include "adic/dyadic_rational.hpp"
#include "adic/ep_seq.hpp"
#include "adic/morse.hpp"

namespace adic {

/// A point of {0,1}^Z with both tails eventually periodic. `right` holds
/// x_0, x_1, ...; `left` holds x_-1, x_-2, ... (index 0 is x_-1).
struct BiSeq {
  EpSeq left;
  EpSeq right;

  /// "(p)abc.xyz(q)": the left side is written as it sits on the line, so
  /// "c" is x_-1 and "(p)" repeats leftward forever.
  static BiSeq parse(std::string_view literal);
  std::string to_string() const;

  Bit digit(std::int64_t n) const {
    return n >= 0 ? right.digit(static_cast<std::size_t>(n))
                  : left.digit(static_cast<std::size_t>(-(n + 1)));
  }

  friend bool operator==(const BiSeq&, const BiSeq&) = default;
};

BiSeq flip(const BiSeq& x);

/// Solenoid coordinates (y, lambda): y in Z_2, lambda in [0, 1).
struct SolenoidCoord {
  EpSeq y;
  BigRational lambda;

  friend bool operator==(const SolenoidCoord&, const SolenoidCoord&) = default;
};

/// sum_{n >= 1} x_-n 2^-n, exactly, in [0, 1] (1 for an all-ones left tail).
BigRational left_tail_value(const EpSeq& left);

/// pi(x) = (x_+, left_tail_value(x_-) mod 1).
SolenoidCoord pi(const BiSeq& x);

/// T-hat: odometer on the right half, left half untouched.
BiSeq t_hat(const BiSeq& x);
BiSeq t_hat_inverse(const BiSeq& x);

/// k-fold two-sided shift: digit n of the result is digit n - k of x.
/// k = 1 is multiplication by 2.
BiSeq s_hat(const BiSeq& x, std::int64_t k = 1);

/// D-hat: digit n of the result is x_n XOR x_(n+1), for every n in Z.
BiSeq d_hat(const BiSeq& x);

/// M-hat: M on the right half; the left half is flipped exactly when the
/// cocycle phi(D x_+) is 1, which makes T-hat D-hat = D-hat M-hat hold.
BiSeq m_hat(const BiSeq& x, Extension ext = Extension::off);
BiSeq m_hat_inverse(const BiSeq& x, Extension ext = Extension::off);

/// T_i = S^i T_0 S^-i: translation by 2^i.
BiSeq t_family(std::int64_t i, const BiSeq& x);

/// M_i = S^i M_0 S^-i.
BiSeq m_family(std::int64_t i, const BiSeq& x, Extension ext = Extension::off);
BiSeq m_family_inverse(std::int64_t i, const BiSeq& x, Extension ext = Extension::off);

/// Translation by q: binary addition with the carry running across the
/// binary point into x_+.
BiSeq q2_translate(const DyadicRational& q, const BiSeq& x);

}  // namespace adic
