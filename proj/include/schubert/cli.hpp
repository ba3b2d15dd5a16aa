#pragma once

// The `schubert` command-line front end, callable in-process for tests.

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert {

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;
/// Out of memory or an internal consistency failure.
inline constexpr int exit_error = 3;

/// Runs one command line (args excludes the program name).  Reports go to
/// `out`, diagnostics and summaries to `err`.  Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubert
