#pragma once

#include <string>

namespace parldoc::subprocess {

struct RunResult {
  int exit_code = -1;
  bool command_not_found = false;
  std::string output;  // combined stdout + stderr
};

/// Runs a shell command line, capturing combined output.
RunResult run_shell(const std::string& command_line);

/// Quotes one argument for POSIX sh.
std::string shell_quote(const std::string& arg);

}  // namespace parldoc::subprocess
