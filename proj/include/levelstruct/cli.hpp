#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "levelstruct/verify.hpp"

namespace levelstruct {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitBound = 3 };

/// Name of the environment variable holding the enumeration bound.
inline constexpr const char* kBoundEnvVar = "LEVELSTRUCT_ENUM_BOUND";

/// Runs the command line `args` (args[0] is the program name). `verify_hooks`
/// is passed through to verify-paper; its limit is replaced by the bound.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const VerifyOptions& verify_hooks = {});

}  // namespace levelstruct
