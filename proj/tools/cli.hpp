#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace almukai::cli {

// Process exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kClassificationFailed = 3;
inline constexpr int kParseError = 4;

// Runs the command line `args` (args[0] is the program name). Input
// matrices are read from a file argument or from `in` when absent or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace almukai::cli
