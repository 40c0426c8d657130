#pragma once

// The Morse transformation M as the adic (immediate-successor) map of the
// order on Z_2 where the comparison of x_j and y_j depends on the next digit:
// 0 before 1 when the next digit is 0, 1 before 0 when it is 1.

#include <cstddef>
#include <optional>
#include <string_view>

#include "adic/ep_seq.hpp"

namespace adic {

/// Whether M is extended to the two maximal points, (01) -> (1) and
/// (10) -> (0), and correspondingly M^-1 to the two minimal points.
enum class Extension : bool { off = false, on = true };

enum class Ordering { less, equal, greater, incomparable };

std::string_view to_string(Ordering o);

/// The partial order. Sequences that are not cofinal are incomparable.
Ordering compare(const EpSeq& x, const EpSeq& y);

/// M. Scans to the first pair aa at index k, writes the complement of a on
/// indices below k and keeps everything from k on. Throws Error(max_point) on
/// (01), (10) unless ext is on.
EpSeq morse_successor(const EpSeq& x, Extension ext = Extension::off);

/// M^-1. Throws Error(min_point) on (0), (1) unless ext is on.
EpSeq morse_predecessor(const EpSeq& y, Extension ext = Extension::off);

/// The cocycle over the odometer: 0 if y starts with an odd number of 1's,
/// 1 if with an even number (zero included), and 1 on the constant sequences.
Bit phi(const EpSeq& y);

/// A point of Z_2 x {0,1}: odometer coordinate and fiber.
struct SkewPoint {
  EpSeq base;
  Bit fiber = 0;

  friend bool operator==(const SkewPoint&, const SkewPoint&) = default;
};

/// F(x) = (Dx, x_0).
SkewPoint f_map(const EpSeq& x);
EpSeq f_inv(const SkewPoint& p);

/// T(phi)(y, g) = (y + 1, phi(y) + g).
SkewPoint skew_step(const SkewPoint& p);
SkewPoint skew_step_inverse(const SkewPoint& p);

enum class OrbitClass {
  generic,
  pos_semiorbit_of_zeros,
  pos_semiorbit_of_ones,
  neg_semiorbit_of_10,
  neg_semiorbit_of_01,
};

std::string_view to_string(OrbitClass c);

/// Default iteration budget for classify_orbit: 2^(L+1) + 8 for preperiod
/// length L (capped at L = 30). An exceptional x sits |Dx| < 2^(L+1) steps
/// from its Min or Max point, so this budget always suffices below the cap.
std::size_t default_orbit_bound(const EpSeq& x);

/// Generic when the M-orbit is the whole cofinality class, i.e. x is neither
/// eventually constant nor eventually alternating. Otherwise walks M^-1 toward
/// (0)/(1) and M toward (10)/(01), at most `bound` steps each way, and throws
/// Error(bound_exceeded) if neither end is reached.
OrbitClass classify_orbit(const EpSeq& x, std::optional<std::size_t> bound = std::nullopt);

}  // namespace adic
