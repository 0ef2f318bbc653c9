// Copyright 2026 The Framekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRAMEKIT_TESTS_SUPPORT_CLI_RUNNER_HPP_
#define FRAMEKIT_TESTS_SUPPORT_CLI_RUNNER_HPP_

#include <sys/wait.h>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace testsupport {

struct CliResult {
  int exit_code;
  std::string out;
};

// Runs the built CLI binary with the given arguments, capturing stdout.
inline CliResult run_cli(const std::string& args) {
  std::string command =
      std::string(FRAMEKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  std::string out;
  char buffer[4096];
  while (::fgets(buffer, sizeof(buffer), pipe) != nullptr) out += buffer;
  int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace testsupport

#endif  // FRAMEKIT_TESTS_SUPPORT_CLI_RUNNER_HPP_
