#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "solvcore/group.hpp"

namespace solvcore::cli {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnsupported = 3;
inline constexpr int kExitInternal = 4;

struct Command {
  std::string verb;  // wp | cp | csp | pp | pair | magnus | selftest
  std::string group_text;
  std::vector<std::string> words;
  bool cross_check = false;
  bool trace = false;
  int budget = 12;
};

// Executes one command, writing the answer to `out` and trace/diagnostics to
// `err`. Returns an exit code.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

// argv-level entry point used by the binary.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace solvcore::cli
