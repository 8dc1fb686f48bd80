#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vspin::cli {

// Runs one pulsecli invocation (args exclude the program name).
// Exit codes: 0 success, 1 verification/classification/preparation failure,
// 2 usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vspin::cli
