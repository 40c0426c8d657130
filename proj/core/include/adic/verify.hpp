#pragma once

// Named verification suites: every identity the library claims, run over
// integer windows plus seeded random exact points.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace adic {

struct Failure {
  std::string case_id;
  std::string input;
  std::string expected;
  std::string got;
};

/// Points deliberately left out of a check (e.g. eventually alternating points
/// for MS = SM^2), reported as data rather than failures.
struct Exclusion {
  std::string label;
  std::size_t count = 0;
};

struct SuiteReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  std::vector<Exclusion> excluded;
  double wall_time = 0.0;  // seconds
  std::uint64_t seed = 0;

  bool ok() const noexcept { return failures.empty(); }
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// "diagrams", "arithmetic", "solenoid", or "all". Deterministic in
/// (suite, samples, seed) apart from wall_time. Throws Error(invalid_argument)
/// on an unknown name.
SuiteReport run_suite(std::string_view suite, std::size_t samples, std::uint64_t seed);

/// Exhaustive prefix-level check of a map on cylinders.
struct CylinderCheck {
  std::size_t determined = 0;    // source cylinders whose image is fixed
  std::size_t undetermined = 0;  // source cylinders without a first pair
  bool well_defined = true;      // image independent of the tails
  bool injective = true;
  bool onto_complement = true;   // images are exactly the non-constant right prefixes
  std::string detail;            // first problem found, if any

  bool ok() const noexcept { return well_defined && injective && onto_complement; }
};

/// M on all 2^m prefixes of length m.
CylinderCheck morse_cylinder_check(unsigned m);

/// M-hat on all (left, right) prefix pairs of total length `total`, with at
/// least one right digit.
CylinderCheck m_hat_cylinder_check(unsigned total);

}  // namespace adic
