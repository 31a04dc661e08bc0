#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fusionlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics and usage to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace fusionlab::cli
