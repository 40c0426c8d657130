#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "adic/bigint.hpp"

namespace adic {

/// An element numerator / 2^exponent of the dyadic rationals Q_2. Held in
/// lowest terms: the numerator is odd or the exponent is zero.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(BigInt numerator, std::uint32_t exponent = 0);

  /// Accepts "n", "p/q" with q a power of two, or "p/2^m". Anything with an
  /// odd factor in the denominator throws Error(not_dyadic).
  static DyadicRational parse(std::string_view text);

  const BigInt& numerator() const noexcept { return numerator_; }
  std::uint32_t exponent() const noexcept { return exponent_; }

  std::string to_string() const;

  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator-(const DyadicRational& a);
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) { return a + (-b); }
  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;

 private:
  BigInt numerator_ = 0;
  std::uint32_t exponent_ = 0;
};

}  // namespace adic
