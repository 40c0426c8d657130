#pragma once

// The Morse substitution 0 -> 01, 1 -> 10, the Thue-Morse sequence u, its
// language, and the coding of Z_2 points by first digits along M-orbits.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "adic/ep_seq.hpp"
#include "adic/morse.hpp"

namespace adic {

/// A finite binary word.
class Word {
 public:
  Word() = default;
  explicit Word(Digits bits);

  /// [01]*; throws Error(parse) otherwise.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  Bit operator[](std::size_t i) const noexcept { return bits_[i]; }
  const Digits& bits() const noexcept { return bits_; }

  Word flipped() const;
  Word reversed() const;
  Word slice(std::size_t pos, std::size_t len) const;
  std::string to_string() const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  Digits bits_;
};

Word zeta(const Word& w);

/// First n symbols of u = 0110100110010110..., built by u[0, 2^(k+1)) =
/// u[0, 2^k) followed by its flip.
Word thue_morse_prefix(std::size_t n);

/// u_n: parity of the binary digit sum of n.
Bit thue_morse_digit(std::uint64_t n);

/// Adjacent XOR of a finite word; one symbol shorter than w (empty for |w| < 2).
Word word_difference(const Word& w);

/// First n symbols of the fixed point of 0 -> 11, 1 -> 10 starting with 1.
Word derivative_fixed_point_prefix(std::size_t n);

std::size_t default_factor_window(std::size_t word_length);

/// Whether w occurs in u, searched in the prefix of u of length `window`
/// (default 8|w| + 16).
bool is_factor(const Word& w, std::size_t window = 0);

/// Symbols at positions lo..hi of a two-sided sequence. lo == hi + 1 is the
/// empty window.
struct CodingWindow {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  Word bits;

  std::size_t size() const noexcept { return bits.size(); }
  Bit at(std::int64_t n) const { return bits[static_cast<std::size_t>(n - lo)]; }
  /// Bits with a '.' before position 0 when the window straddles it.
  std::string to_string() const;

  friend bool operator==(const CodingWindow&, const CodingWindow&) = default;
};

/// The coding map g: window position n holds digit 0 of M^n x. Negative
/// positions walk M^-1. With ext on, M and M^-1 pass through the Max/Min
/// points; otherwise reaching them throws Error(max_point / min_point).
CodingWindow coding(const EpSeq& x, std::int64_t lo, std::int64_t hi,
                    Extension ext = Extension::off);

struct Desubstitution {
  CodingWindow preimage;
  /// 0: blocks start at even positions (a = zeta(a')); 1: at odd positions
  /// (a = sigma zeta(a')).
  Bit offset = 0;
};

/// Psi on a finite window: parses w into 2-blocks 01/10. Throws
/// Error(ambiguous_window) if both parities parse and Error(not_a_factor) if
/// neither does.
Desubstitution desubstitute(const CodingWindow& w);

}  // namespace adic
