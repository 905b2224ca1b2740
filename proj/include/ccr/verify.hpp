#ifndef CCR_VERIFY_HPP
#define CCR_VERIFY_HPP

#include <string>
#include <vector>

namespace ccr {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Registered oracle cross-checks, in the order the acceptance suite
/// runs them (the first nine are the acceptance criteria).
std::vector<std::string> check_names();

CheckResult run_check(const std::string& name);

std::vector<CheckResult> run_all_checks();

}  // namespace ccr

#endif
