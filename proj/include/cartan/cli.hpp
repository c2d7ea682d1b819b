#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cartan::cli {

inline constexpr int schema_version = 1;
inline constexpr const char* tool_version = "1.0.0";

/// Exit codes: 0 success, 1 error (usage or computation), 2 a check
/// subcommand ran and its predicate is false.
enum ExitCode : int { exit_ok = 0, exit_error = 1, exit_false = 2 };

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cartan::cli
