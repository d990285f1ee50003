#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modinv::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kBadArguments = 2 };

/// Default upper bound on the genus; MODINV_MAX_GENUS overrides it.
constexpr int kDefaultMaxGenus = 64;
int max_genus();

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modinv::cli
