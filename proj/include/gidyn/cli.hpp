#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gidyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 2;
inline constexpr int kExitDistinguished = 3;

/// Runs one command line (argv[0] is the program name). Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gidyn::cli
