// Copyright 2026 The agentic-typer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AGENTIC_TYPER_SUBPROCESS_H_
#define AGENTIC_TYPER_SUBPROCESS_H_

#include <sys/types.h>

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace agentic_typer {

struct ProcessResult {
  int exit_code = -1;  // 128 + signal when killed by a signal
  std::string out;
  std::string err;
};

// Runs argv[0] (searched on PATH) to completion in `cwd`, capturing stdout
// and stderr. Throws std::runtime_error if the process cannot be started.
ProcessResult RunProcess(const std::vector<std::string>& argv,
                         const std::filesystem::path& cwd);

// Searches PATH for an executable named `name`.
std::optional<std::filesystem::path> FindOnPath(const std::string& name);

// A child connected through pipes, exchanging newline-delimited messages.
// The child inherits the environment. Destruction closes stdin and reaps the
// child, killing it if it does not exit promptly.
class LineChannel {
 public:
  // Runs `command` through /bin/sh -c.
  LineChannel(const std::string& command, const std::filesystem::path& cwd);
  ~LineChannel();
  LineChannel(const LineChannel&) = delete;
  LineChannel& operator=(const LineChannel&) = delete;

  // Returns false if the child has closed its end.
  bool WriteLine(const std::string& line);

  // Next line without its terminator; nullopt on EOF or timeout.
  std::optional<std::string> ReadLine(std::chrono::milliseconds timeout);
  bool timed_out() const { return timed_out_; }

 private:
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
  bool timed_out_ = false;
};

}  // namespace agentic_typer

#endif  // AGENTIC_TYPER_SUBPROCESS_H_
