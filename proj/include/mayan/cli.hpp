#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mayan::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Results go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mayan::cli
