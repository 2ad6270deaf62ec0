#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "orderspec/cli/config.hpp"

namespace orderspec::cli {

enum ExitCode { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitBound = 3 };

// Runs the command line (program name excluded) and returns the exit code.
// JSON goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env);

}  // namespace orderspec::cli
