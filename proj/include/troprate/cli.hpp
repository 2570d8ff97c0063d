#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace troprate::cli {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseFailure = 2,
  kValidationFailure = 3,
  kSolverFailure = 4,
  kOutOfFront = 5,
};

/// Runs `troprate <args...>`. JSON records go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace troprate::cli
