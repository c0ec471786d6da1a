#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumlab {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitTheoremFailure = 1,
  kExitUsage = 2,
  kExitConjectureData = 3,
};

/// Runs the command line (without the program name). Data goes to out,
/// diagnostics and progress to err.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sumlab
