#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace minorforge {

// Exit codes shared by every subcommand.
inline constexpr int kExitFound = 0;     // certificate produced / all checks pass
inline constexpr int kExitNegative = 1;  // definitive negative outcome
inline constexpr int kExitUsage = 2;     // bad flags or unparseable input
inline constexpr int kExitBudget = 3;    // search budget exhausted, undecided

// Runs one invocation (args excludes the program name). Reports go to `out`,
// diagnostics to `err`. The on-disk result cache is enabled when the
// MINORFORGE_CACHE environment variable names a directory.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace minorforge
