#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace threedist::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kValidation = 2;
inline constexpr int kPrecision = 3;
inline constexpr int kSearch = 4;

// Runs one command line (without the program name). Payload goes to out,
// diagnostics and error payloads to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace threedist::cli
