#pragma once

#include <ostream>

#include "fockdarwin/cli/config.hpp"

namespace fockdarwin::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumerical = 2, kVerificationFailed = 3 };

/// Runs one subcommand. The main dataset goes to config.out, or to `out` when no
/// path is set; secondary datasets and the JSON summary are written next to
/// config.out (<out>.veff.csv, <out>.path.csv, <out>.summary.json). Diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fockdarwin::cli
