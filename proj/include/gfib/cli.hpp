#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gfib::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,        // bad flags or a violated operation precondition
  kUnsound = 3,      // a prediction or closed form disagreed with the recurrence
};

/// Default cap on the index for which the recurrence oracle is run.
inline constexpr unsigned long long kDefaultOracleLimit = 100000;
/// Deepest negative index `gen --from` accepts.
inline constexpr long long kBackwardDepthLimit = 10000;

/// Runs `gfib <args...>` (args excludes the program name) and returns the
/// exit code. GFIB_ORACLE_LIMIT in the environment replaces the default
/// oracle limit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfib::cli
