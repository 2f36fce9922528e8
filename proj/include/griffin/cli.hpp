#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace griffin {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalidInput = 3;

// Hard cap on n from GRIFFIN_MAX_N, default 7.
int max_n_from_env();

// Runs the griffin command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace griffin
