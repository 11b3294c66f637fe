#ifndef KNUDSEN_CLI_HPP
#define KNUDSEN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace knudsen {

enum ExitCode : int {
    kExitSuccess = 0,
    kExitUsage = 1,
    kExitVerificationFailed = 2,
    kExitNumerical = 3,
};

/// χ values of the tabulated jump coefficients.
const std::vector<double>& table_chis();

/// Runs the command line (args excludes the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace knudsen

#endif // KNUDSEN_CLI_HPP
