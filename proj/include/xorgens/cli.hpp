#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xorgens::cli {

// Exit codes, one per failure class.
inline constexpr int kOk = 0;
inline constexpr int kVerifyMismatch = 1;
inline constexpr int kUsage = 2;
inline constexpr int kUnlisted = 3;
inline constexpr int kBadFactorData = 4;
inline constexpr int kInternal = 5;

// Dispatch a full command line (without argv[0]). Streams are injected so
// tests can capture them; the real main wires std::cout / std::cerr.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xorgens::cli
