#pragma once

// Command-line front end. run_cli takes the argument vector without the
// program name so tests can drive it in-process.
//
// Exit codes: 0 ok, 1 a verify check failed, 2 bad input.

#include <iosfwd>
#include <string>
#include <vector>

#include "floorlat/verify.hpp"

namespace floorlat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadInput = 2;

struct CliHooks {
  /// Appended to the built-in checks of the `verify` subcommand.
  std::vector<VerifyCheck> extra_checks;
};

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks = {});

}  // namespace floorlat
