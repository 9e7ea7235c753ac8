#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace topo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation of the command-line tool. `args` excludes the program
/// name. Reports go to `out` (or the --output file), diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace topo::cli
