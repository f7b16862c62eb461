#pragma once

#include <string>
#include <vector>

namespace mcs {

inline constexpr const char kVersion[] = "0.1.0";

// Outcome of one CLI invocation. `text` is what belongs on standard
// output: the result envelope as JSON (newline terminated), or plain help
// text for --help/--version. When --out consumed the envelope, `text` is
// empty and `out_path` names the file written.
struct CommandOutcome {
  int exit_code = 0;
  std::string status;  // ok, violation-report or error
  std::string text;
  std::string out_path;
};

// Parses and runs one command. argv holds the arguments only, without a
// program name. Never throws: every failure becomes an error envelope with
// exit code 1 (domain errors) or 2 (usage, malformed input).
CommandOutcome run_command(const std::vector<std::string>& argv);

}  // namespace mcs
