#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diffinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitTolerance = 3;
inline constexpr int kExitUsage = 64;

/// Runs one subcommand. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diffinv::cli
