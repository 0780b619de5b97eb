#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbibraid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitHonestUnknown = 3;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbibraid::cli
