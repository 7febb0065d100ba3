#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monotone::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, budget_exceeded = 3 };

inline constexpr const char* kVersion = "0.1.0";

/// Runs the `monotone` command line. args excludes the program name.
/// Reports go to `out` (or the -o file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monotone::cli
