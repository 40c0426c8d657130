#include "adic/morse.hpp"

#include <algorithm>

#include "adic/error.hpp"

namespace adic {

namespace {

const EpSeq& alternating_01() {
  static const EpSeq x({}, {0, 1});
  return x;
}

const EpSeq& alternating_10() {
  static const EpSeq x({}, {1, 0});
  return x;
}

}  // namespace

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::less: return "<";
    case Ordering::equal: return "=";
    case Ordering::greater: return ">";
    case Ordering::incomparable: return "incomparable";
  }
  return "?";
}

Ordering compare(const EpSeq& x, const EpSeq& y) {
  if (x == y) return Ordering::equal;
  if (!is_cofinal(x, y)) return Ordering::incomparable;
  // Cofinal sequences agree from max(preperiod lengths) on.
  std::size_t j = std::max(x.preperiod_length(), y.preperiod_length());
  while (j-- > 0) {
    if (x.digit(j) != y.digit(j)) break;
  }
  // x_j precedes y_j iff x_j equals the shared next digit.
  return x.digit(j) == x.digit(j + 1) ? Ordering::less : Ordering::greater;
}

EpSeq morse_successor(const EpSeq& x, Extension ext) {
  if (is_max(x)) {
    if (ext == Extension::off) {
      throw Error(ErrorKind::max_point, x.to_string() + " is maximal; M is undefined there");
    }
    return EpSeq::constant(x.digit(0) == 0 ? 1 : 0);
  }
  const std::size_t k = first_pair_index(x);
  const Bit a = x.digit(k);
  const Digits head(k, static_cast<Bit>(a ^ 1));
  return x.suffix(k).prepend(head);
}

EpSeq morse_predecessor(const EpSeq& y, Extension ext) {
  if (is_min(y)) {
    if (ext == Extension::off) {
      throw Error(ErrorKind::min_point, y.to_string() + " is minimal; M^-1 is undefined there");
    }
    return y.digit(0) == 0 ? alternating_10() : alternating_01();
  }
  std::size_t k = 1;
  while (y.digit(k) == y.digit(0)) ++k;
  const Bit b = y.digit(k);
  // Alternating below k, with x_(k-1) = x_k = b forming the first pair.
  Digits head(k);
  for (std::size_t i = 0; i < k; ++i) head[k - 1 - i] = static_cast<Bit>(b ^ (i & 1U));
  return y.suffix(k).prepend(head);
}

Bit phi(const EpSeq& y) {
  if (is_min(y)) return 1;
  std::size_t ones = 0;
  while (y.digit(ones) == 1) ++ones;
  return (ones % 2 == 1) ? 0 : 1;
}

SkewPoint f_map(const EpSeq& x) { return {differentiate(x), x.digit(0)}; }

EpSeq f_inv(const SkewPoint& p) { return integrate(p.base, p.fiber); }

SkewPoint skew_step(const SkewPoint& p) {
  return {add_one(p.base), static_cast<Bit>(p.fiber ^ phi(p.base))};
}

SkewPoint skew_step_inverse(const SkewPoint& p) {
  EpSeq prev = subtract_one(p.base);
  const Bit g = p.fiber ^ phi(prev);
  return {std::move(prev), g};
}

std::string_view to_string(OrbitClass c) {
  switch (c) {
    case OrbitClass::generic: return "Generic";
    case OrbitClass::pos_semiorbit_of_zeros: return "PosSemiorbitOfZeros";
    case OrbitClass::pos_semiorbit_of_ones: return "PosSemiorbitOfOnes";
    case OrbitClass::neg_semiorbit_of_10: return "NegSemiorbitOf10";
    case OrbitClass::neg_semiorbit_of_01: return "NegSemiorbitOf01";
  }
  return "?";
}

std::size_t default_orbit_bound(const EpSeq& x) {
  const std::size_t l = std::min<std::size_t>(x.preperiod_length(), 30);
  return (std::size_t{1} << (l + 1)) + 8;
}

OrbitClass classify_orbit(const EpSeq& x, std::optional<std::size_t> bound) {
  if (!is_eventually_constant(x) && !is_eventually_alternating(x)) return OrbitClass::generic;
  const std::size_t steps = bound.value_or(default_orbit_bound(x));

  EpSeq cur = x;
  for (std::size_t i = 0; i <= steps; ++i) {
    if (is_min(cur)) {
      return cur.digit(0) == 0 ? OrbitClass::pos_semiorbit_of_zeros
                               : OrbitClass::pos_semiorbit_of_ones;
    }
    if (i == steps || is_max(cur)) break;
    cur = morse_predecessor(cur);
  }
  cur = x;
  for (std::size_t i = 0; i <= steps; ++i) {
    if (is_max(cur)) {
      return cur == alternating_10() ? OrbitClass::neg_semiorbit_of_10
                                     : OrbitClass::neg_semiorbit_of_01;
    }
    if (i == steps || is_min(cur)) break;
    cur = morse_successor(cur);
  }
  throw Error(ErrorKind::bound_exceeded,
              "orbit of " + x.to_string() + " not resolved within " + std::to_string(steps) +
                  " steps in either direction");
}

}  // namespace adic
