#pragma once

#include <ostream>
#include <span>
#include <string>

namespace cayley::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsageError = 2;

// Runs one subcommand. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace cayley::cli
