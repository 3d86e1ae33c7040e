#pragma once

#include <iosfwd>

namespace ddmap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadConfig = 1;
inline constexpr int kExitDivergence = 2;

/// Parses argv, runs the subcommand and maps failures onto exit codes.
/// Primary output goes to `out` (or --output), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ddmap::cli
