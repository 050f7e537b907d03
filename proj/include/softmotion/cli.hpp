#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace softmotion {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInfeasible = 3;

// Runs one command line (without the program name), e.g. {"plan-ptp", "--from", "0,0,0", ...}.
// Files named "-" (or an omitted --out) go to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace softmotion
