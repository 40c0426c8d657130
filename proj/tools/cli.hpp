#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adic::cli {

/// Exit statuses of the command-line tool.
enum Exit : int {
  success = 0,
  verification_failure = 1,
  usage_error = 2,
  domain_error = 3,
};

/// Runs the tool on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adic::cli
