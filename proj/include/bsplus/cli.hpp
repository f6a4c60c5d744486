#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsplus {

/// Exit status contract of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,  // some verdict was VIOLATION
  kExitUsage = 2,      // malformed arguments or literals
};

/// Runs one CLI invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsplus
