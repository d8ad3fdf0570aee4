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

#ifndef AGENTIC_TYPER_CLI_H_
#define AGENTIC_TYPER_CLI_H_

#include <atomic>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "agentic_typer/agent.h"
#include "agentic_typer/event_log.h"
#include "agentic_typer/report.h"
#include "agentic_typer/workspace.h"

namespace agentic_typer {

// Project defaults, read from the repository root.
constexpr std::string_view kProjectConfigFile = "agentic-typer.json";
// Run outputs, relative to the repository root.
constexpr std::string_view kOutputDir = ".agentic-typer";

struct CliConfig {
  std::filesystem::path root = ".";
  std::string repo_label;  // defaults to the root directory's name
  Phase phase = Phase::kMinimalSetup;
  int parallelism = 10;
  // "scripted" or "external:<command>".
  std::string backend = "scripted";
  HookMode hook_mode = HookMode::kReject;
  int rounds = 3;
  std::optional<std::filesystem::path> classification_map;
  std::optional<std::filesystem::path> baseline;
  Price price;
  bool dry_run = false;
  bool overwrite_config = false;
  std::optional<std::filesystem::path> checker;
  std::optional<std::filesystem::path> json_out;
  std::optional<std::filesystem::path> log_out;

  std::optional<std::string> external_command() const;
};

// Keys accepted in the project file and in the flag overlay: root (flags
// only), repo, phase, parallelism, backend, hook_mode, rounds,
// classification_map, baseline, price_in, price_out, dry_run,
// overwrite_config, checker, json_out, log_out.
//
// Every key in `flags` wins over the same key in `file`, which wins over the
// built-in default. Relative paths from the file are taken relative to the
// root. Throws ConfigError on unknown keys, bad values, parallelism < 1 or an
// external backend without a command.
CliConfig ResolveCliConfig(const Json& file, const Json& flags);

// The project file under `root`, or an empty object when there is none.
// Throws ConfigError when it is not a JSON object.
Json ReadProjectConfig(const std::filesystem::path& root);

int CmdInit(const CliConfig& config, std::ostream& out, std::ostream& err);
int CmdRun(const CliConfig& config, std::ostream& out, std::ostream& err,
           const std::atomic<bool>* cancel = nullptr);
// 0 equivalent, 1 different (one line per edit on `out`), 2 unreadable or
// not tokenizable.
int CmdDiff(const std::filesystem::path& a, const std::filesystem::path& b,
            std::ostream& out, std::ostream& err);
int CmdReport(const std::filesystem::path& event_log,
              const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace agentic_typer

#endif  // AGENTIC_TYPER_CLI_H_
