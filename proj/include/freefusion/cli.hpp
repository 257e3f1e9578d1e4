#ifndef FREEFUSION_CLI_HPP
#define FREEFUSION_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace freefusion::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs the command line `args` (args[0] is the program name). Tables go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 on a validation or
/// check failure (including exceeded computation caps), 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freefusion::cli

#endif  // FREEFUSION_CLI_HPP
