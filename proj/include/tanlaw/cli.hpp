#pragma once

#include <ostream>

namespace tanlaw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitArgument = 1;
inline constexpr int kExitConsistency = 2;

/// Parses argv (argv[0] is the program name), runs the subcommand and writes its
/// artifact to `out` (or the --output file); diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tanlaw::cli
