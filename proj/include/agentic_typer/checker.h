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

#ifndef AGENTIC_TYPER_CHECKER_H_
#define AGENTIC_TYPER_CHECKER_H_

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace agentic_typer {

enum class Severity { kError, kWarning };

struct Diagnostic {
  std::string path;  // repository-relative, as printed by the checker
  int line = 1;      // 1-based
  int column = 1;    // 1-based
  std::string code;  // e.g. "TS2339"
  // First line of the message plus any continuation lines, joined with '\n'
  // and kept verbatim (including their indentation).
  std::string message;
  Severity severity = Severity::kError;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// Parses `<path>(<line>,<col>): <error|warning> <CODE>: <message>`.
// Anything else (summaries, blank lines, continuations) yields nullopt.
std::optional<Diagnostic> ParseDiagnosticLine(std::string_view line);

// Inverse of the stream parser for one diagnostic (may span several lines,
// no trailing newline).
std::string RenderDiagnostic(const Diagnostic& d);

// The checker's output split into diagnostics and every other line, in
// order. RenderCheckerOutput(ParseCheckerOutput(t)) == t for '\n'-terminated
// text.
struct CheckerOutput {
  using Item = std::variant<Diagnostic, std::string>;
  std::vector<Item> items;

  std::vector<Diagnostic> diagnostics() const;
  // Non-diagnostic lines that are not blank.
  std::vector<std::string> other_lines() const;
};

CheckerOutput ParseCheckerOutput(std::string_view text);
std::string RenderCheckerOutput(const CheckerOutput& output);

struct ErrorSnapshot {
  std::chrono::steady_clock::time_point taken_at;
  // Errors only, each list sorted by (line, column, code).
  std::map<std::string, std::vector<Diagnostic>> by_file;
  size_t total = 0;
  std::vector<Diagnostic> warnings;
  // Unparsed checker output that was not a diagnostic, e.g. global
  // configuration errors.
  std::vector<std::string> notes;

  std::vector<Diagnostic> errors() const;
  size_t ErrorsIn(const std::string& path) const;
};

// Groups, sorts and counts. Warnings are separated out.
ErrorSnapshot MakeSnapshot(std::vector<Diagnostic> diagnostics);

// Keeps only `path`.
ErrorSnapshot RestrictToFile(const ErrorSnapshot& snapshot,
                             const std::string& path);

struct SnapshotDiff {
  std::vector<Diagnostic> resolved;
  std::vector<Diagnostic> introduced;
};

// Multiset difference keyed on (path, code, whitespace-normalized message).
// Line and column do not take part, so diagnostics that merely moved are
// neither resolved nor introduced.
SnapshotDiff DiffSnapshots(const ErrorSnapshot& before,
                           const ErrorSnapshot& after);

std::string NormalizeMessage(std::string_view message);

class CheckerEnvironmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The checker exited abnormally without printing any diagnostics.
class CheckerCrash : public std::runtime_error {
 public:
  CheckerCrash(const std::string& what, std::string output)
      : std::runtime_error(what), output_(std::move(output)) {}
  const std::string& output() const { return output_; }

 private:
  std::string output_;
};

struct CheckerOptions {
  std::optional<std::filesystem::path> explicit_binary;
  std::string config_file = "tsconfig.json";
};

// Explicit path, then <root>/node_modules/.bin/tsc, then PATH.
// Throws CheckerEnvironmentError when none is usable.
std::filesystem::path ResolveCheckerBinary(const std::filesystem::path& root,
                                           const CheckerOptions& options);

// Runs the type checker over a repository. Invocations are serialized; a
// request is answered by a whole-project run that starts after the request
// was made, so concurrent requests share a run. A single-file scope filters
// that project-wide result.
class Checker {
 public:
  Checker(std::filesystem::path root, CheckerOptions options = {});

  ErrorSnapshot Check();
  ErrorSnapshot CheckFile(const std::string& path);

  const std::filesystem::path& binary() const { return binary_; }
  uint64_t runs() const;

 private:
  ErrorSnapshot RunOnce() const;

  std::filesystem::path root_;
  CheckerOptions options_;
  std::filesystem::path binary_;

  mutable std::mutex mu_;
  std::condition_variable cv_;
  bool running_ = false;
  uint64_t started_ = 0;
  uint64_t completed_ = 0;
  ErrorSnapshot last_;
  std::exception_ptr last_error_;
};

}  // namespace agentic_typer

#endif  // AGENTIC_TYPER_CHECKER_H_
