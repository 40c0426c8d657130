#include "adic/substitution.hpp"

#include <algorithm>
#include <bit>

#include "adic/error.hpp"

namespace adic {

Word::Word(Digits bits) : bits_(std::move(bits)) {
  if (std::ranges::any_of(bits_, [](Bit b) { return b > 1; })) {
    throw Error(ErrorKind::invalid_argument, "word symbols must be 0 or 1");
  }
}

Word Word::parse(std::string_view text) {
  Digits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw Error(ErrorKind::parse, "not a binary word: '" + std::string(text) + "'");
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return Word(std::move(bits));
}

Word Word::flipped() const {
  Digits out = bits_;
  for (Bit& b : out) b ^= 1;
  return Word(std::move(out));
}

Word Word::reversed() const { return Word(Digits(bits_.rbegin(), bits_.rend())); }

Word Word::slice(std::size_t pos, std::size_t len) const {
  const auto first = bits_.begin() + static_cast<std::ptrdiff_t>(pos);
  return Word(Digits(first, first + static_cast<std::ptrdiff_t>(len)));
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (Bit b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

Word operator+(const Word& a, const Word& b) {
  Digits out = a.bits_;
  out.insert(out.end(), b.bits_.begin(), b.bits_.end());
  return Word(std::move(out));
}

Word zeta(const Word& w) {
  Digits out;
  out.reserve(2 * w.size());
  for (Bit b : w.bits()) {
    out.push_back(b);
    out.push_back(b ^ 1);
  }
  return Word(std::move(out));
}

Word thue_morse_prefix(std::size_t n) {
  Digits u{0};
  u.reserve(std::bit_ceil(std::max<std::size_t>(n, 1)));
  while (u.size() < n) {
    const std::size_t half = u.size();
    for (std::size_t i = 0; i < half; ++i) u.push_back(u[i] ^ 1);
  }
  u.resize(n);
  return Word(std::move(u));
}

Bit thue_morse_digit(std::uint64_t n) { return static_cast<Bit>(std::popcount(n) & 1); }

Word word_difference(const Word& w) {
  if (w.size() < 2) return Word();
  Digits out(w.size() - 1);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) out[i] = w[i] ^ w[i + 1];
  return Word(std::move(out));
}

Word derivative_fixed_point_prefix(std::size_t n) {
  Digits w{1};
  while (w.size() < n) {
    Digits next;
    next.reserve(2 * w.size());
    for (Bit b : w) {
      next.push_back(1);
      next.push_back(b == 0 ? 1 : 0);
    }
    w = std::move(next);
  }
  w.resize(n);
  return Word(std::move(w));
}

std::size_t default_factor_window(std::size_t word_length) { return 8 * word_length + 16; }

bool is_factor(const Word& w, std::size_t window) {
  if (w.empty()) return true;
  const std::size_t len = window == 0 ? default_factor_window(w.size()) : window;
  const Word u = thue_morse_prefix(len);
  return std::ranges::search(u.bits(), w.bits()).begin() != u.bits().end();
}

std::string CodingWindow::to_string() const {
  std::string s = bits.to_string();
  if (lo < 0 && hi >= 0) s.insert(static_cast<std::size_t>(-lo), ".");
  return s;
}

CodingWindow coding(const EpSeq& x, std::int64_t lo, std::int64_t hi, Extension ext) {
  if (lo > hi + 1) throw Error(ErrorKind::invalid_argument, "coding window needs lo <= hi + 1");
  CodingWindow w{lo, hi, {}};
  Digits bits(static_cast<std::size_t>(hi - lo + 1));
  auto put = [&](std::int64_t n, const EpSeq& p) {
    if (n >= lo && n <= hi) bits[static_cast<std::size_t>(n - lo)] = p.digit(0);
  };
  EpSeq cur = x;
  for (std::int64_t n = 0; n <= hi; ++n) {
    if (n > 0) cur = morse_successor(cur, ext);
    put(n, cur);
  }
  cur = x;
  for (std::int64_t n = -1; n >= lo; --n) {
    cur = morse_predecessor(cur, ext);
    put(n, cur);
  }
  w.bits = Word(std::move(bits));
  return w;
}

namespace {

std::int64_t mod2(std::int64_t v) { return ((v % 2) + 2) % 2; }

// First block start at or after lo with the given parity, and whether every
// complete block [s, s+1] inside the window reads 01 or 10.
bool parses(const CodingWindow& w, Bit offset, std::int64_t& first_start) {
  first_start = mod2(w.lo - offset) == 0 ? w.lo : w.lo + 1;
  for (std::int64_t s = first_start; s + 1 <= w.hi; s += 2) {
    if (w.at(s) == w.at(s + 1)) return false;
  }
  return true;
}

}  // namespace

Desubstitution desubstitute(const CodingWindow& w) {
  std::int64_t start0 = 0;
  std::int64_t start1 = 0;
  const bool even = parses(w, 0, start0);
  const bool odd = parses(w, 1, start1);
  if (even && odd) {
    throw Error(ErrorKind::ambiguous_window,
                "window '" + w.to_string() + "' parses into 2-blocks at both parities");
  }
  if (!even && !odd) {
    throw Error(ErrorKind::not_a_factor, "window '" + w.to_string() + "' is not a zeta-image");
  }
  const Bit offset = even ? 0 : 1;
  const std::int64_t first = even ? start0 : start1;
  Desubstitution out;
  out.offset = offset;
  out.preimage.lo = (first + offset) / 2;
  Digits bits;
  for (std::int64_t s = first; s + 1 <= w.hi; s += 2) bits.push_back(w.at(s));
  out.preimage.hi = out.preimage.lo + static_cast<std::int64_t>(bits.size()) - 1;
  out.preimage.bits = Word(std::move(bits));
  return out;
}

}  // namespace adic
