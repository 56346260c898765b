#pragma once

#include <iosfwd>

namespace ttperm::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kInvariantViolation = 3,
  kSizeLimit = 4,
};

// Runs the ttperm command line with the given arguments (argv[0] is the
// program name); output goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ttperm::cli
