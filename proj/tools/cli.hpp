#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sb::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInfeasible = 1,  // p cannot be made a winner (within the budget)
  kUsage = 2,       // bad arguments, unreadable or invalid input, unsupported combination
  kCapacity = 3,    // size or enumeration limits exceeded
};

// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sb::cli
