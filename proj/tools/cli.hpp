#pragma once

#include <iosfwd>

namespace tetdual::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;      // parse errors, invalid input, failed validation
inline constexpr int kExitRankGuard = 2;
inline constexpr int kExitOracleMismatch = 3;

/// Runs one subcommand. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tetdual::cli
