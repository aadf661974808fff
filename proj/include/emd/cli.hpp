#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace emd::cli {

// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kNotResolving = 1;
inline constexpr int kPartial = 2;
inline constexpr int kUsage = 64;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace emd::cli
