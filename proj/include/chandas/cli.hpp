#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chandas::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitVerifyMismatch = 4;

// Parses and executes one invocation. `args` excludes the program name.
// Results go to `out`; diagnostics and verification reports go to `err`.
// Output is written only after the command succeeds, except for
// `prastara --stream`, which writes rows as they are generated.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace chandas::cli
