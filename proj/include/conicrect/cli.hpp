#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conicrect::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,   // bad flags or a violated precondition
  kNoConvergence = 3,
};

/// Runs one command.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conicrect::cli
