#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liouville::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;  ///< domain error or negative verdict
inline constexpr int exit_usage = 2;    ///< bad command line or malformed input file

/// Runs one command. `args` excludes the program name. Data goes to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liouville::cli
