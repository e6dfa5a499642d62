#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace radonlink {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitVerificationFailed = 3,
  kExitInternalDefect = 4,
};

/// Runs one command line (without the program name). Documents go to `out`,
/// diagnostics to `err`.
///
///   find <pointfile> [-o FILE]
///   verify <pointfile> <resultfile>
///   enumerate <pointfile> [--jobs J] [--max-n M]
///   gen --n N --seed S [--bound B | --moment t1,...,t_{n+3}] [-o FILE]
///   check-gp <pointfile>
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radonlink
