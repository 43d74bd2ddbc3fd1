#pragma once

#include <string>
#include <vector>

namespace cominq::cli {

// Exit codes: 0 = success / all checks pass, 1 = verification failure,
// 2 = usage or parse error.  Payload goes out on stdout, diagnostics on
// stderr; identical inputs produce byte-identical payloads.
struct CommandOutcome {
  int exit_code;
  std::string out;
  std::string err;
};

// Dispatches one invocation; args excludes the program name.
CommandOutcome run(const std::vector<std::string>& args);

// Convenience wrapper for main(): runs, prints, returns the exit code.
int run_main(int argc, char** argv);

}  // namespace cominq::cli
