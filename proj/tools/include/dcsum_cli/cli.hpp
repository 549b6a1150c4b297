#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitResidual = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line (args excludes the program name). Returns 0 on
// success, 1 when an audit finds a nonzero residual, 2 on usage or
// precondition errors. Diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcsum::cli
