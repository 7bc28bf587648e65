#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bohrlab::cli {

/// Process exit statuses; pairwise distinct and stable.
enum ExitCode : int {
  kSuccess = 0,
  kViolation = 1,
  kParseError = 2,
  kUsageError = 3,
  kUncertified = 4,
};

/// Runs one command line (without the program name) and returns its exit
/// status. Reports go to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bohrlab::cli
