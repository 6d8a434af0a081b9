#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace privcoal::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParameterError = 2,
  kAuthorizationError = 3,
  kCapacityError = 4,
};

// Runs one command line (args excludes the program name). Documents go to
// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace privcoal::cli
