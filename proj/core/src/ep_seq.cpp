#include "adic/ep_seq.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <string>

#include "adic/error.hpp"

namespace adic {

namespace {

bool is_odd(const BigInt& n) {
  return boost::multiprecision::bit_test(boost::multiprecision::abs(n), 0);
}

BigInt pow2(std::size_t e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

Digits parse_bits(std::string_view s) {
  Digits out;
  out.reserve(s.size());
  for (char c : s) out.push_back(static_cast<Bit>(c - '0'));
  return out;
}

std::string bits_to_string(const Digits& d) {
  std::string s;
  s.reserve(d.size());
  for (Bit b : d) s.push_back(static_cast<char>('0' + b));
  return s;
}

}  // namespace

EpSeq::EpSeq() : period_{0} {}

EpSeq::EpSeq(Digits preperiod, Digits period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) {
    throw Error(ErrorKind::invalid_argument, "EpSeq period must be nonempty");
  }
  auto not_bit = [](Bit b) { return b > 1; };
  if (std::ranges::any_of(preperiod_, not_bit) || std::ranges::any_of(period_, not_bit)) {
    throw Error(ErrorKind::invalid_argument, "EpSeq digits must be 0 or 1");
  }
  canonicalize();
}

EpSeq EpSeq::constant(Bit b) { return EpSeq({}, {b}); }

void EpSeq::canonicalize() {
  // Shortest period: the least d dividing |period| with period d-periodic.
  const std::size_t n = period_.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = period_[i] == period_[i - d];
    if (periodic) {
      period_.resize(d);
      break;
    }
  }
  // Absorb trailing preperiod digits into a rotated period.
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    preperiod_.pop_back();
    std::rotate(period_.begin(), period_.end() - 1, period_.end());
  }
}

EpSeq EpSeq::parse(std::string_view literal) {
  static const std::regex grammar(R"(^([01]*)\(([01]+)\)$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(literal.begin(), literal.end(), m, grammar)) {
    throw Error(ErrorKind::parse, "not a sequence literal: '" + std::string(literal) + "'");
  }
  return EpSeq(parse_bits(std::string_view(&*m[1].first, m[1].length())),
               parse_bits(std::string_view(&*m[2].first, m[2].length())));
}

Digits EpSeq::prefix(std::size_t n) const {
  Digits out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = digit(i);
  return out;
}

EpSeq EpSeq::suffix(std::size_t from) const {
  if (from <= preperiod_.size()) {
    return EpSeq(Digits(preperiod_.begin() + static_cast<std::ptrdiff_t>(from), preperiod_.end()),
                 period_);
  }
  Digits rotated = period_;
  const std::size_t shift = (from - preperiod_.size()) % period_.size();
  std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(shift), rotated.end());
  return EpSeq({}, std::move(rotated));
}

EpSeq EpSeq::prepend(std::span<const Bit> head) const {
  Digits pre(head.begin(), head.end());
  pre.insert(pre.end(), preperiod_.begin(), preperiod_.end());
  return EpSeq(std::move(pre), period_);
}

std::string EpSeq::to_string() const {
  return bits_to_string(preperiod_) + "(" + bits_to_string(period_) + ")";
}

std::string OddFraction::to_string() const {
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

EpSeq from_integer(const BigInt& n) {
  Digits pre;
  BigInt v = n;
  while (v != 0 && v != -1) {
    const Bit b = is_odd(v) ? 1 : 0;
    pre.push_back(b);
    v = (v - b) / 2;
  }
  return EpSeq(std::move(pre), {static_cast<Bit>(v == -1 ? 1 : 0)});
}

EpSeq from_rational(const BigInt& p, const BigInt& q) {
  if (q == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
  BigInt num = q < 0 ? BigInt(-p) : p;
  BigInt den = q < 0 ? BigInt(-q) : q;
  const BigInt g = boost::multiprecision::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!is_odd(den)) {
    throw Error(ErrorKind::even_denominator,
                "denominator " + den.str() + " is even; not a 2-adic integer");
  }
  if (den == 1) return from_integer(num);

  // x_0 = num mod 2 and (x - x_0)/2 = (num - x_0 den) / (2 den); the numerators
  // fall into [-den, 0] and then cycle.
  Digits digits;
  std::map<BigInt, std::size_t> seen;
  while (true) {
    auto [it, inserted] = seen.emplace(num, digits.size());
    if (!inserted) {
      const auto start = static_cast<std::ptrdiff_t>(it->second);
      return EpSeq(Digits(digits.begin(), digits.begin() + start),
                   Digits(digits.begin() + start, digits.end()));
    }
    const Bit b = is_odd(num) ? 1 : 0;
    digits.push_back(b);
    num = (num - BigInt(b) * den) / 2;
  }
}

OddFraction to_rational(const EpSeq& x) {
  BigInt head = 0;
  for (std::size_t i = x.preperiod_length(); i-- > 0;) head = 2 * head + x.preperiod()[i];
  BigInt cycle = 0;
  for (std::size_t i = x.period_length(); i-- > 0;) cycle = 2 * cycle + x.period()[i];
  // x = head + 2^L * cycle / (1 - 2^P)
  const BigInt den = pow2(x.period_length()) - 1;
  BigInt num = head * den - pow2(x.preperiod_length()) * cycle;
  BigInt d = den;
  const BigInt g = boost::multiprecision::gcd(num, d);
  if (g > 1) {
    num /= g;
    d /= g;
  }
  return {std::move(num), std::move(d)};
}

EpSeq parse_point(std::string_view text) {
  static const std::regex integer(R"(^[+-]?[0-9]+$)");
  static const std::regex fraction(R"(^([+-]?[0-9]+)/([0-9]+)$)");
  const std::string s(text);
  if (!s.empty() && s.back() == ')') return EpSeq::parse(s);
  std::smatch m;
  if (std::regex_match(s, integer)) return from_integer(BigInt(s[0] == '+' ? s.substr(1) : s));
  if (std::regex_match(s, m, fraction)) {
    std::string p = m[1].str();
    if (p[0] == '+') p = p.substr(1);
    return from_rational(BigInt(p), BigInt(m[2].str()));
  }
  throw Error(ErrorKind::parse, "not a point literal, integer, or p/q: '" + s + "'");
}

EpSeq flip(const EpSeq& x) {
  Digits pre = x.preperiod();
  Digits per = x.period();
  for (Bit& b : pre) b ^= 1;
  for (Bit& b : per) b ^= 1;
  return EpSeq(std::move(pre), std::move(per));
}

namespace {

// Flips digits 0..i where i is the first index holding `stop`; if no such
// index exists the sequence is constant and wraps to its complement.
EpSeq ripple(const EpSeq& x, Bit stop) {
  for (std::size_t i = 0; i < x.span(); ++i) {
    if (x.digit(i) == stop) {
      Digits head(i + 1, stop);
      head[i] = static_cast<Bit>(stop ^ 1);
      return x.suffix(i + 1).prepend(head);
    }
  }
  return EpSeq::constant(stop);
}

}  // namespace

EpSeq add_one(const EpSeq& x) { return ripple(x, 0); }

EpSeq subtract_one(const EpSeq& x) { return ripple(x, 1); }

EpSeq add(const EpSeq& x, const EpSeq& y) {
  const std::size_t start = std::max(x.preperiod_length(), y.preperiod_length());
  const std::size_t block = std::lcm(x.period_length(), y.period_length());
  Digits out;
  unsigned carry = 0;
  auto step = [&](std::size_t n) {
    const unsigned s = x.digit(n) + y.digit(n) + carry;
    out.push_back(static_cast<Bit>(s & 1U));
    carry = s >> 1;
  };
  for (std::size_t n = 0; n < start; ++n) step(n);
  // From `start` on the digit pairs repeat every `block` positions, so the
  // output repeats as soon as the carry entering a block repeats. The carry is
  // a single bit: that happens within three block boundaries.
  std::vector<unsigned> carry_at_block{carry};
  for (std::size_t k = 1;; ++k) {
    for (std::size_t n = 0; n < block; ++n) step(start + (k - 1) * block + n);
    for (std::size_t j = 0; j < carry_at_block.size(); ++j) {
      if (carry_at_block[j] == carry) {
        const auto from = static_cast<std::ptrdiff_t>(start + j * block);
        return EpSeq(Digits(out.begin(), out.begin() + from), Digits(out.begin() + from, out.end()));
      }
    }
    carry_at_block.push_back(carry);
  }
}

EpSeq negate(const EpSeq& x) { return add_one(flip(x)); }

EpSeq differentiate(const EpSeq& x) {
  const std::size_t len = x.preperiod_length();
  Digits pre(len);
  Digits per(x.period_length());
  for (std::size_t n = 0; n < len; ++n) pre[n] = x.digit(n) ^ x.digit(n + 1);
  for (std::size_t i = 0; i < per.size(); ++i) per[i] = x.digit(len + i) ^ x.digit(len + i + 1);
  return EpSeq(std::move(pre), std::move(per));
}

EpSeq integrate(const EpSeq& y, Bit x0) {
  // x_(n+1) = x_n XOR y_n. Past the preperiod of y, two periods of y XOR to
  // zero, so x repeats with period 2|period(y)|.
  const std::size_t len = y.preperiod_length();
  const std::size_t total = len + 2 * y.period_length();
  Digits x(total);
  x[0] = x0 & 1;
  for (std::size_t n = 0; n + 1 < total; ++n) x[n + 1] = x[n] ^ y.digit(n);
  const auto cut = static_cast<std::ptrdiff_t>(len);
  return EpSeq(Digits(x.begin(), x.begin() + cut), Digits(x.begin() + cut, x.end()));
}

EpSeq shift_drop(const EpSeq& x) { return x.suffix(1); }

EpSeq doubled(const EpSeq& x) {
  const Bit zero[] = {0};
  return x.prepend(zero);
}

std::size_t first_pair_index(const EpSeq& x) {
  for (std::size_t k = 1; k <= x.span(); ++k) {
    if (x.digit(k - 1) == x.digit(k)) return k;
  }
  throw Error(ErrorKind::alternating_point,
              "no pair of equal adjacent digits in " + x.to_string());
}

bool is_max(const EpSeq& x) {
  return x.preperiod().empty() && x.period_length() == 2;
}

bool is_min(const EpSeq& x) {
  return x.preperiod().empty() && x.period_length() == 1;
}

bool is_eventually_constant(const EpSeq& x) { return x.period_length() == 1; }

// A primitive period of length 2 is 01 or 10.
bool is_eventually_alternating(const EpSeq& x) { return x.period_length() == 2; }

bool is_cofinal(const EpSeq& x, const EpSeq& y) {
  if (x.period_length() != y.period_length()) return false;
  const std::size_t start = std::max(x.preperiod_length(), y.preperiod_length());
  for (std::size_t i = 0; i < x.period_length(); ++i) {
    if (x.digit(start + i) != y.digit(start + i)) return false;
  }
  return true;
}

}  // namespace adic
