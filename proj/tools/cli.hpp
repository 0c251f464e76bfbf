#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aos::cli {

/// Process exit codes of the `aos` tool.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kInfeasible = 2,
  kUnbounded = 3,
  kTruncated = 4,
  kUsage = 64,
  kNumericFailure = 70,
};

/// Runs one `aos` command. Reports go to --output (written atomically) or
/// to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aos::cli
