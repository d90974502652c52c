#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charbound {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
};

/// Runs the charbound command line. `args` excludes the program name.
/// Reads CHARBOUND_MAX_CASES from the environment for `verify`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charbound
