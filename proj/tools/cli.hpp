#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diskflow::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // mismatch, failed verification, I/O or data error
inline constexpr int kUsage = 2;    // invalid arguments or bound violation

/// Runs one command line (without the program name). Data goes to `out`
/// unless a file is named; logs and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diskflow::cli
