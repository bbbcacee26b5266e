#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mgfix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. The JSON (or CSV)
/// report goes to `out`, the human summary and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgfix::cli
