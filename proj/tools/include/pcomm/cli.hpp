#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pcomm::cli {

// Exit codes: 0 success, 1 internal or numerical failure, 2 rejected input,
// 3 a checked identity or bound did not hold.
enum ExitCode : int { kOk = 0, kInternal = 1, kBadInput = 2, kVerificationFailed = 3 };

// Runs one command.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcomm::cli
