#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chiy::cli {

/// Exit codes: 0 success, 1 verification or consistency failure, 2 usage or
/// input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chiy::cli
