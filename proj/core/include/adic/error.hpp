#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adic {

enum class ErrorKind {
  parse,
  even_denominator,
  not_dyadic,
  alternating_point,
  max_point,
  min_point,
  bound_exceeded,
  ambiguous_window,
  not_a_factor,
  invalid_argument,
};

std::string_view to_string(ErrorKind kind);

/// Domain and parse failures raised by the library. The kind is what callers
/// branch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for the Max/Min/alternating family: a map is undefined at the point.
  bool is_domain_error() const noexcept {
    return kind_ == ErrorKind::alternating_point ||
           kind_ == ErrorKind::max_point || kind_ == ErrorKind::min_point;
  }

 private:
  ErrorKind kind_;
};

}  // namespace adic
