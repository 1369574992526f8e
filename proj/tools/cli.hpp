#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mimick::cli {

enum ExitCode : int {
  kOk = 0,
  /// Verification failed or a bound was violated.
  kFailed = 1,
  /// Bad input, bad flags or an enumeration guard.
  kUsage = 2,
};

/// Runs one command line (args[0] is the program name). Writes JSON results
/// to `out` and diagnostics to `err`; `out` stays empty on kUsage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mimick::cli
