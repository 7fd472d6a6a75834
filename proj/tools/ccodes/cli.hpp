#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccodes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs the ccodes command line with args excluding the program name.
/// Data goes to out, diagnostics to err; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccodes::cli
