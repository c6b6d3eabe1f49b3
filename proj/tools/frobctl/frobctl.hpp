#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frobctl {

/// Exit codes.
inline constexpr int kAllPass = 0;
inline constexpr int kPropertyViolated = 1;
inline constexpr int kUsageError = 2;

/// Runs one frobctl invocation. `args` excludes the program name. The JSON
/// report goes to `out` (or the --output file), diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobctl
