#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace doob::cli {

/// Exit statuses of the command-line tool.
enum Status : int {
  kOk = 0,
  kViolated = 1,
  kUsage = 2,
  kFalsified = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace doob::cli
