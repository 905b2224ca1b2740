#ifndef CCR_CLI_HPP
#define CCR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ccr {

/// Runs one CLI invocation.  Exit codes: 0 success, 1 computation error
/// (caps, unmet preconditions), 2 flag validation error.  Human-free
/// JSON goes to `out`; machine-readable error JSON goes to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccr

#endif
