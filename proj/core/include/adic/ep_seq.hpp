#pragma once

// Eventually periodic one-sided binary sequences: the exact, computable
// skeleton of the 2-adic integers (every such sequence is a rational p/q with
// q odd, and every such rational has one).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adic/bigint.hpp"

namespace adic {

using Bit = std::uint8_t;
using Digits = std::vector<Bit>;

/// A 2-adic integer x = sum x_j 2^j whose digit sequence is a finite
/// preperiod followed by a period repeated forever. Index 0 is the least
/// significant digit. Values are always held in canonical form (primitive
/// period, shortest preperiod), so == is equality of sequences.
class EpSeq {
 public:
  /// The all-zero sequence (0).
  EpSeq();
  /// Throws Error(invalid_argument) on an empty period or a digit outside {0,1}.
  EpSeq(Digits preperiod, Digits period);

  static EpSeq constant(Bit b);

  /// Strict literal grammar `[01]*\([01]+\)`, e.g. "01(10)".
  static EpSeq parse(std::string_view literal);

  const Digits& preperiod() const noexcept { return preperiod_; }
  const Digits& period() const noexcept { return period_; }
  std::size_t preperiod_length() const noexcept { return preperiod_.size(); }
  std::size_t period_length() const noexcept { return period_.size(); }

  /// Number of digits after which everything is determined by one period.
  std::size_t span() const noexcept { return preperiod_.size() + period_.size(); }

  Bit digit(std::size_t i) const noexcept {
    if (i < preperiod_.size()) return preperiod_[i];
    return period_[(i - preperiod_.size()) % period_.size()];
  }

  Digits prefix(std::size_t n) const;

  /// The sequence x_from, x_from+1, ...
  EpSeq suffix(std::size_t from) const;

  /// head followed by this sequence.
  EpSeq prepend(std::span<const Bit> head) const;

  std::string to_string() const;

  friend bool operator==(const EpSeq&, const EpSeq&) = default;
  friend auto operator<=>(const EpSeq&, const EpSeq&) = default;

 private:
  void canonicalize();

  Digits preperiod_;
  Digits period_;
};

/// p/q with q odd and positive, gcd(p, q) = 1.
struct OddFraction {
  BigInt num;
  BigInt den;

  std::string to_string() const;
  friend bool operator==(const OddFraction&, const OddFraction&) = default;
};

EpSeq from_integer(const BigInt& n);
/// Throws Error(even_denominator) when q reduces to an even number, and
/// Error(invalid_argument) when q == 0.
EpSeq from_rational(const BigInt& p, const BigInt& q);
OddFraction to_rational(const EpSeq& x);

/// Accepts a sequence literal, a signed decimal integer, or p/q with q odd.
EpSeq parse_point(std::string_view text);

EpSeq flip(const EpSeq& x);

/// The odometer T: x + 1 by ripple carry.
EpSeq add_one(const EpSeq& x);
EpSeq subtract_one(const EpSeq& x);

/// Exact 2-adic sum by carry propagation over the periodic tails.
EpSeq add(const EpSeq& x, const EpSeq& y);
EpSeq negate(const EpSeq& x);

/// D: digit n of the result is x_n XOR x_(n+1).
EpSeq differentiate(const EpSeq& x);

/// The preimage of y under D whose first digit is x0.
EpSeq integrate(const EpSeq& y, Bit x0);

/// One-sided shift S: drops x_0, i.e. x -> (x - x_0) / 2.
EpSeq shift_drop(const EpSeq& x);

/// x -> 2x: prepends a zero digit.
EpSeq doubled(const EpSeq& x);

/// Least k >= 1 with x_(k-1) == x_k. Throws Error(alternating_point) on
/// (01) and (10), which have no such k.
std::size_t first_pair_index(const EpSeq& x);

/// x in {(01), (10)}: the points with no Morse successor.
bool is_max(const EpSeq& x);
/// x in {(0), (1)}: the points with no Morse predecessor.
bool is_min(const EpSeq& x);

bool is_eventually_constant(const EpSeq& x);
bool is_eventually_alternating(const EpSeq& x);

/// True iff x and y differ in only finitely many places.
bool is_cofinal(const EpSeq& x, const EpSeq& y);

}  // namespace adic
