#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cullis::cli {

/// Exit statuses shared by every subcommand.
enum Status : int {
    kSuccess = 0,
    kFailure = 1,  ///< a check failed; a witness has been printed
    kUsage = 2,    ///< bad arguments, unreadable input, or unmet hypotheses
};

/// Runs `cullis <args...>` (args excludes the program name) and returns the
/// exit status. All output goes to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cullis::cli
