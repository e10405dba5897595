#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcgf2::cli {

/// Exit codes: 0 success, 1 semantic failure (not equivalent, not an Euler
/// system, failed verification), 2 malformed input or usage.
enum ExitCode : int { kOk = 0, kFailure = 1, kInputError = 2 };

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcgf2::cli
