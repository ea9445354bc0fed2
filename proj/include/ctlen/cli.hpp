#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctlen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   // certification or property failure
inline constexpr int kExitBadInput = 2;  // malformed input or usage

/// Entry point shared by the ctlen executable and the tests. args excludes
/// the program name. Reports go to out (or to --out files), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctlen::cli
