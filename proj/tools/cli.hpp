#pragma once

#include <ostream>
#include <span>
#include <string>

namespace optree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // an axiom or identity failed
inline constexpr int kExitUsage = 2;   // bad flags, unparsable input

/// Runs one command line (without the program name) and returns the exit
/// status. Output is deterministic for fixed arguments.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace optree::cli
