#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxplus::cli {

/// Process exit codes. `check` and `invariant` map their three-way verdicts onto 0, 2 and 3.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kNotWeaklyConsistent = 2,
  kWeakOpen = 3,
  kInfeasibleHorizon = 4,
};

/// Name of the environment variable holding the default probe bound.
inline constexpr const char* kProbeBoundEnv = "MAXPLUS_PROBE_BOUND";

/// Runs the command line `args` (args[0] is the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxplus::cli
