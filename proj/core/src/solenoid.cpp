#include "adic/solenoid.hpp"

#include <regex>

#include "adic/error.hpp"

namespace adic {

namespace {

Digits reversed_bits(const std::string& s) {
  Digits out;
  out.reserve(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(static_cast<Bit>(*it - '0'));
  return out;
}

Digits bits(const std::string& s) {
  Digits out;
  out.reserve(s.size());
  for (char c : s) out.push_back(static_cast<Bit>(c - '0'));
  return out;
}

std::string reversed_string(const Digits& d) {
  std::string s;
  s.reserve(d.size());
  for (auto it = d.rbegin(); it != d.rend(); ++it) s.push_back(static_cast<char>('0' + *it));
  return s;
}

std::string as_string(const Digits& d) {
  std::string s;
  s.reserve(d.size());
  for (Bit b : d) s.push_back(static_cast<char>('0' + b));
  return s;
}

BigRational pow2(std::size_t e) {
  BigInt p = 1;
  p <<= e;
  return BigRational(p);
}

}  // namespace

BiSeq BiSeq::parse(std::string_view literal) {
  static const std::regex grammar(R"(^\(([01]+)\)([01]*)\.([01]*)\(([01]+)\)$)");
  const std::string s(literal);
  std::smatch m;
  if (!std::regex_match(s, m, grammar)) {
    throw Error(ErrorKind::parse, "not a two-sided literal '(p)abc.xyz(q)': '" + s + "'");
  }
  return {EpSeq(reversed_bits(m[2].str()), reversed_bits(m[1].str())),
          EpSeq(bits(m[3].str()), bits(m[4].str()))};
}

std::string BiSeq::to_string() const {
  return "(" + reversed_string(left.period()) + ")" + reversed_string(left.preperiod()) + "." +
         as_string(right.preperiod()) + "(" + as_string(right.period()) + ")";
}

BiSeq flip(const BiSeq& x) { return {flip(x.left), flip(x.right)}; }

BigRational left_tail_value(const EpSeq& left) {
  // 0.abc(p) = A / 2^L + V / (2^L (2^P - 1)), A and V read most significant first.
  BigInt head = 0;
  for (Bit b : left.preperiod()) head = 2 * head + b;
  BigInt cycle = 0;
  for (Bit b : left.period()) cycle = 2 * cycle + b;
  const BigRational scale = pow2(left.preperiod_length());
  const BigRational repeat = pow2(left.period_length()) - 1;
  return BigRational(head) / scale + BigRational(cycle) / (scale * repeat);
}

SolenoidCoord pi(const BiSeq& x) {
  BigRational lambda = left_tail_value(x.left);
  if (lambda == 1) lambda = 0;
  return {x.right, std::move(lambda)};
}

BiSeq t_hat(const BiSeq& x) { return {x.left, add_one(x.right)}; }

BiSeq t_hat_inverse(const BiSeq& x) { return {x.left, subtract_one(x.right)}; }

BiSeq s_hat(const BiSeq& x, std::int64_t k) {
  BiSeq out = x;
  for (; k > 0; --k) {
    const Bit carried[] = {out.left.digit(0)};
    out = {out.left.suffix(1), out.right.prepend(carried)};
  }
  for (; k < 0; ++k) {
    const Bit carried[] = {out.right.digit(0)};
    out = {out.left.prepend(carried), out.right.suffix(1)};
  }
  return out;
}

BiSeq d_hat(const BiSeq& x) {
  // Left digit i of the result is x_-(i+1) XOR x_-i: the forward difference of
  // the sequence x_0, x_-1, x_-2, ...
  const Bit boundary[] = {x.right.digit(0)};
  return {differentiate(x.left.prepend(boundary)), differentiate(x.right)};
}

BiSeq m_hat(const BiSeq& x, Extension ext) {
  const Bit c = phi(differentiate(x.right));
  EpSeq right = morse_successor(x.right, ext);
  return {c == 1 ? flip(x.left) : x.left, std::move(right)};
}

BiSeq m_hat_inverse(const BiSeq& x, Extension ext) {
  EpSeq right = morse_predecessor(x.right, ext);
  const Bit c = phi(differentiate(right));
  return {c == 1 ? flip(x.left) : x.left, std::move(right)};
}

BiSeq t_family(std::int64_t i, const BiSeq& x) { return s_hat(t_hat(s_hat(x, -i)), i); }

BiSeq m_family(std::int64_t i, const BiSeq& x, Extension ext) {
  return s_hat(m_hat(s_hat(x, -i), ext), i);
}

BiSeq m_family_inverse(std::int64_t i, const BiSeq& x, Extension ext) {
  return s_hat(m_hat_inverse(s_hat(x, -i), ext), i);
}

BiSeq q2_translate(const DyadicRational& q, const BiSeq& x) {
  // Bring position -e to 0, add the integer numerator there, shift back.
  const auto e = static_cast<std::int64_t>(q.exponent());
  BiSeq moved = s_hat(x, e);
  moved.right = add(moved.right, from_integer(q.numerator()));
  return s_hat(moved, -e);
}

}  // namespace adic
