#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlozenge::cli {

// Exit codes of the command line tool.
inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlozenge::cli
