#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace supcalc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation of the command-line tool; args excludes the program
/// name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supcalc::cli
