#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace compsem::cli {

// Exit status contract of every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kRejected = 1,   // ungrammatical sentence, failed identity check
  kUsageError = 2  // bad arguments, unreadable or inconsistent data
};

// Entry point behind the `compsem` executable. args excludes the program
// name. Subcommands: `space build`, `parse`, `meaning`, `compare`,
// `demo snake`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace compsem::cli
