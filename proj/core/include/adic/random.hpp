#pragma once

// Seeded generators for property checks. Only raw mt19937_64 output is used
// (no <random> distributions), so a seed gives the same points everywhere.

#include <cstdint>
#include <random>

#include "adic/dyadic_rational.hpp"
#include "adic/ep_seq.hpp"
#include "adic/solenoid.hpp"

namespace adic {

using Rng = std::mt19937_64;

struct EpSeqShape {
  std::size_t max_preperiod = 10;
  std::size_t max_period = 6;
};

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

EpSeq random_ep_seq(Rng& rng, EpSeqShape shape = {});

/// Rejects eventually constant and eventually alternating sequences.
EpSeq random_generic_ep_seq(Rng& rng, EpSeqShape shape = {});

/// Rejects the Max points (01), (10).
EpSeq random_non_max_ep_seq(Rng& rng, EpSeqShape shape = {});

BiSeq random_bi_seq(Rng& rng, EpSeqShape shape = {});

/// Numerator in [-2^bits, 2^bits), exponent in [0, max_exponent].
DyadicRational random_dyadic(Rng& rng, unsigned bits = 12, std::uint32_t max_exponent = 10);

}  // namespace adic
