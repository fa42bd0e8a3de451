#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rmcodes::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,        ///< accepted / feasible / reproduced
    kRejected = 1,  ///< reject, infeasible or mismatch
    kUsage = 2,     ///< bad arguments or unusable input
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rmcodes::cli
