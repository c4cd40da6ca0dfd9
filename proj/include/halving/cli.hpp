#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace halving::cli {

/// Exit codes: 0 verified, 1 verification failed, 2 usage error.
inline constexpr int kVerified = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

/// args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace halving::cli
