#ifndef BLOWUP_CLI_H_
#define BLOWUP_CLI_H_

#include <iosfwd>

namespace blowup {

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,  // bad flags, I/O errors, cap refusals
  kExitCounterDisagreement = 3,
};

// Entry point for the blowup-c4 tool: generate, count, formula, verify, sequence.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace blowup

#endif  // BLOWUP_CLI_H_
