#ifndef QUADMAT_TESTS_SUPPORT_HPP
#define QUADMAT_TESTS_SUPPORT_HPP

#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace testsupport {

struct CommandResult {
  int status;
  std::string output;
};

// Runs a shell command, capturing stdout; stderr is dropped.
inline CommandResult run_command(const std::string& cmd) {
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int rc = pclose(pipe);
  int status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return {status, out};
}

}  // namespace testsupport

#endif
