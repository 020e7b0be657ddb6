#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multideal::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kDegenerate = 2;
inline constexpr int kInconclusive = 3;

// Runs the command line (without the program name). Results go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multideal::cli
