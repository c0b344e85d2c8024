#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coverkit::cli {

// Exit codes: 0 PASS or NOT-APPLICABLE, 1 FAIL, 2 usage, parse or runtime error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coverkit::cli
