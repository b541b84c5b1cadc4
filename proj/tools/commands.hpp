#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lfdtool {

/// Exit codes: 0 definitive, 2 inconclusive, 1 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInconclusive = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lfdtool
