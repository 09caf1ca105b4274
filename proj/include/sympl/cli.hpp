#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sympl {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name. Results go to out,
/// diagnostics to err; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sympl
