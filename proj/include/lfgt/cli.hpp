#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lfgt {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitTrue = 0,
  kExitFalse = 1,
  kExitInputError = 2,
  kExitInternal = 3,
};

/// Runs one command. `args` excludes the program name. Output is written only
/// once the command has finished; diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace lfgt
