#include "adic/error.hpp"

namespace adic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::even_denominator: return "EvenDenominator";
    case ErrorKind::not_dyadic: return "NotDyadic";
    case ErrorKind::alternating_point: return "AlternatingPoint";
    case ErrorKind::max_point: return "MaxPoint";
    case ErrorKind::min_point: return "MinPoint";
    case ErrorKind::bound_exceeded: return "BoundExceeded";
    case ErrorKind::ambiguous_window: return "AmbiguousWindow";
    case ErrorKind::not_a_factor: return "NotAFactor";
    case ErrorKind::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace adic
