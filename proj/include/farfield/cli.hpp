// SPDX-License-Identifier: Apache-2.0

#ifndef FARFIELD_CLI_HPP
#define FARFIELD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace farfield::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitOracleFail = 3;

/// Runs one command line (args excludes the program name) and returns the
/// process exit code. All output goes to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace farfield::cli

#endif  // FARFIELD_CLI_HPP
