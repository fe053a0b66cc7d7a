#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flagclean {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,         ///< parse or validation error, bad usage
  kExitPrecondition = 2,  ///< e.g. window too small
  kExitNegative = 3,      ///< not clean, disagreement, failed check
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagclean
