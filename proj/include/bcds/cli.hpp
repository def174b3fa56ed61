#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bcds::cli {

/// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kInfeasible = 3;
inline constexpr int kCapacity = 4;
inline constexpr int kUsage = 64;

/// Runs one command line. `args` excludes the program name. Reports go to
/// `out` (or the file named by --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcds::cli
