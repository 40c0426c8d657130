#include "adic/random.hpp"

namespace adic {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % bound;
}

EpSeq random_ep_seq(Rng& rng, EpSeqShape shape) {
  Digits pre(uniform_below(rng, shape.max_preperiod + 1));
  Digits per(1 + uniform_below(rng, shape.max_period));
  for (Bit& b : pre) b = static_cast<Bit>(rng() & 1U);
  for (Bit& b : per) b = static_cast<Bit>(rng() & 1U);
  return EpSeq(std::move(pre), std::move(per));
}

EpSeq random_generic_ep_seq(Rng& rng, EpSeqShape shape) {
  if (shape.max_period < 3) shape.max_period = 3;
  while (true) {
    EpSeq x = random_ep_seq(rng, shape);
    if (!is_eventually_constant(x) && !is_eventually_alternating(x)) return x;
  }
}

EpSeq random_non_max_ep_seq(Rng& rng, EpSeqShape shape) {
  while (true) {
    EpSeq x = random_ep_seq(rng, shape);
    if (!is_max(x)) return x;
  }
}

BiSeq random_bi_seq(Rng& rng, EpSeqShape shape) {
  EpSeq left = random_ep_seq(rng, shape);
  EpSeq right = random_ep_seq(rng, shape);
  return {std::move(left), std::move(right)};
}

DyadicRational random_dyadic(Rng& rng, unsigned bits, std::uint32_t max_exponent) {
  const std::uint64_t span = std::uint64_t{1} << (bits + 1);
  const auto n = static_cast<std::int64_t>(uniform_below(rng, span)) - (std::int64_t{1} << bits);
  const auto e = static_cast<std::uint32_t>(uniform_below(rng, max_exponent + 1));
  return DyadicRational(BigInt(n), e);
}

}  // namespace adic
