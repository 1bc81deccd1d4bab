#include "parldoc/subprocess.hpp"

#include <cstdio>
#include <sys/wait.h>

#include "parldoc/errors.hpp"

namespace parldoc::subprocess {

RunResult run_shell(const std::string& command_line) {
  RunResult result;
  std::string cmd = command_line + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw EnvironmentError("cannot spawn shell for: " + command_line);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.output.append(buf, n);
  }
  int status = pclose(pipe);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
    result.command_not_found = (result.exit_code == 127);
  } else {
    result.exit_code = -1;
  }
  return result;
}

std::string shell_quote(const std::string& arg) {
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out.push_back(c);
    }
  }
  out.push_back('\'');
  return out;
}

}  // namespace parldoc::subprocess
