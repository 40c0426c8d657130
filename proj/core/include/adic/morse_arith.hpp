#pragma once

// Morse arithmetic: M restricted to the integers, and M as a time change of
// the odometer, Mx = x + theta(x).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "adic/bigint.hpp"
#include "adic/ep_seq.hpp"

namespace adic {

/// a_r = (2^r - 1)/3 for even r, (2^r - 2)/3 for odd r.
BigInt a_of(unsigned r);

/// r = first_pair_index + 1; pair_value 0 for a leading 00 pair (case i),
/// 1 for 11 (case ii).
struct CaseTag {
  unsigned r = 0;
  Bit pair_value = 0;

  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

/// Throws Error(max_point) on (01), (10).
CaseTag classify(const EpSeq& x);

/// The representation n = 2^r l + a_(r-1) (case i) or
/// n = 2^r l + 2^(r-1) + a_r (case ii), found arithmetically as the least
/// r >= 2 whose residue matches. n must be non-negative.
CaseTag residue_case(const BigInt& n);

/// +a_r in case (i), -a_r in case (ii). Throws Error(max_point) on Max.
BigInt theta(const EpSeq& x);

/// M on the integers: n + a_r or n - a_r by residue_case for n >= 0, and
/// M(n) = -M(-n - 1) - 1 for n < 0.
BigInt morse_int(const BigInt& n);

/// Checks morse_successor(x) == x + theta(x), the right side by carry
/// arithmetic. Throws Error(max_point) on Max.
bool time_change_check(const EpSeq& x);

struct ThetaLevelCounts {
  /// counts[k] = #{n in [0, 2^m) : the m-digit prefix has its first pair at k},
  /// for 1 <= k < m; counts[0] is unused.
  std::vector<std::uint64_t> counts;
  /// Prefixes with no pair at all (the two alternating ones).
  std::uint64_t alternating = 0;
};

/// Exhaustive count over all m-digit prefixes, 1 <= m <= 24.
ThetaLevelCounts theta_level_counts(unsigned m);

}  // namespace adic
