#include "adic/dyadic_rational.hpp"

#include <regex>

#include "adic/error.hpp"

namespace adic {

DyadicRational::DyadicRational(BigInt numerator, std::uint32_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  const auto low = static_cast<std::uint32_t>(
      boost::multiprecision::lsb(boost::multiprecision::abs(numerator_)));
  const std::uint32_t cut = std::min(low, exponent_);
  numerator_ >>= cut;  // exact: the low `cut` bits are zero
  exponent_ -= cut;
}

DyadicRational DyadicRational::parse(std::string_view text) {
  static const std::regex integer(R"(^([+-]?[0-9]+)$)");
  static const std::regex power(R"(^([+-]?[0-9]+)/2\^([0-9]+)$)");
  static const std::regex fraction(R"(^([+-]?[0-9]+)/([0-9]+)$)");
  const std::string s(text);
  auto to_big = [](std::string v) {
    if (!v.empty() && v[0] == '+') v.erase(0, 1);
    return BigInt(v);
  };
  std::smatch m;
  if (std::regex_match(s, m, integer)) return DyadicRational(to_big(m[1].str()));
  if (std::regex_match(s, m, power)) {
    return DyadicRational(to_big(m[1].str()), static_cast<std::uint32_t>(std::stoul(m[2].str())));
  }
  if (std::regex_match(s, m, fraction)) {
    BigInt p = to_big(m[1].str());
    BigInt q(m[2].str());
    if (q == 0) throw Error(ErrorKind::invalid_argument, "zero denominator in '" + s + "'");
    const BigInt g = boost::multiprecision::gcd(p, q);
    if (g > 1) {
      p /= g;
      q /= g;
    }
    const auto e = static_cast<std::uint32_t>(boost::multiprecision::lsb(q));
    if (q != (BigInt(1) << e)) {
      throw Error(ErrorKind::not_dyadic, "'" + s + "' has an odd factor in its denominator");
    }
    return DyadicRational(std::move(p), e);
  }
  throw Error(ErrorKind::parse, "not a dyadic rational: '" + s + "'");
}

std::string DyadicRational::to_string() const {
  if (exponent_ == 0) return numerator_.str();
  return numerator_.str() + "/2^" + std::to_string(exponent_);
}

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  const std::uint32_t e = std::max(a.exponent_, b.exponent_);
  BigInt n = (a.numerator_ << (e - a.exponent_)) + (b.numerator_ << (e - b.exponent_));
  return DyadicRational(std::move(n), e);
}

DyadicRational operator-(const DyadicRational& a) {
  return DyadicRational(BigInt(-a.numerator_), a.exponent_);
}

}  // namespace adic
