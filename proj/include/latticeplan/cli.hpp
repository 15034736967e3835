#ifndef LATTICEPLAN_CLI_HPP
#define LATTICEPLAN_CLI_HPP

#include <string>
#include <vector>

namespace latticeplan {

/// Command-line driver behind the latticeplan binary. `args` excludes the
/// program name. Exit codes: 0 success, 1 domain failure (no path found),
/// 2 usage or configuration error.
int run_cli(const std::vector<std::string>& args);

} // namespace latticeplan

#endif
