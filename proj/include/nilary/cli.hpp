#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilary {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,  // harness violation or hunt without matches
  kExitUsage = 2,
};

// Entry point of the `nilary` command line tool. args excludes the program
// name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilary
