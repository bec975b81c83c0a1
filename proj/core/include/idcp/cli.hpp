#pragma once

#include <string>
#include <vector>

namespace idcp {

/// Runs one CLI invocation. Exit codes: 0 success / zero violations,
/// 1 violations or non-convergence, 2 usage or input errors.
int cli_dispatch(const std::vector<std::string>& args);
int cli_dispatch(int argc, const char* const* argv);

}  // namespace idcp
