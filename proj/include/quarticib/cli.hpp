#pragma once

#include <optional>
#include <string>

namespace qib::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kReducible = 2,
  kContractViolation = 3,
  kFactorizationIncomplete = 4,
};

// Raw command-line values.  Integers stay strings until a command validates
// them, so nothing is computed from a malformed job.
struct JobSpec {
  std::string a;
  std::string b;
  std::optional<std::string> p;
  bool verify = false;
  bool text = false;
  unsigned long max_trial_division = 1000000;
};

struct CommandResult {
  int exit_code = kOk;
  std::string output;  // one JSON document, or text with --text
};

CommandResult cmd_pbasis(const JobSpec& job);
CommandResult cmd_basis(const JobSpec& job);
CommandResult cmd_disc(const JobSpec& job);
CommandResult cmd_polygon(const JobSpec& job);
// a and b are "lo:hi" ranges (or single values); p optional, defaults to
// 2, 3, 5, 7, 11, 13.
CommandResult cmd_check(const JobSpec& job, unsigned threads = 0);

}  // namespace qib::cli
