#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cliffsyl::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // bad flags, unparsable literals, unsupported dimension
inline constexpr int kExitMath = 2;   // singular, inconsistent, non-invertible

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliffsyl::cli
