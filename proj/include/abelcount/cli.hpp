#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace abelcount {

/// Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name) writing results
/// to `out` and diagnostics to `err`. Subcommands: coeff, table, series, verify.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abelcount
