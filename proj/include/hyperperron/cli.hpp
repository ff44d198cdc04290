#ifndef HYPERPERRON_CLI_HPP
#define HYPERPERRON_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hyperperron::cli {

enum ExitCode : int {
  kOk = 0,
  kCertificateFailure = 1,
  kUsageError = 2,
  kNotConverged = 3,
};

/// Runs one command. `args` excludes the program name, e.g.
/// {"alpha", "--gen", "path_graph", "--n", "3", "--json"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperperron::cli

#endif  // HYPERPERRON_CLI_HPP
