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

#ifndef AGENTIC_TYPER_ORCHESTRATOR_H_
#define AGENTIC_TYPER_ORCHESTRATOR_H_

#include <atomic>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "agentic_typer/agent.h"
#include "agentic_typer/checker.h"
#include "agentic_typer/event_log.h"
#include "agentic_typer/suppression.h"
#include "agentic_typer/workspace.h"

namespace agentic_typer {

struct RunPlan {
  Phase phase = Phase::kMinimalSetup;
  std::string repo_label;
  int parallelism = 10;
  int verification_rounds = 3;
  int max_turns = 30;
  int max_attempts = 3;
  HookMode hook_mode = HookMode::kReject;
  // Used for every session; scripted with `policy` when empty.
  BackendFactory backend;
  std::string backend_label = "scripted";
  ScriptedPolicy policy = DefaultScriptedPolicy();
  std::set<std::string> missing_declaration_codes =
      DefaultMissingDeclarationCodes();
  bool record_types_packages = true;
  CheckerOptions checker;
  const std::atomic<bool>* cancel = nullptr;
};

// Exit statuses of a run.
constexpr int kExitClean = 0;
constexpr int kExitUnresolved = 1;
constexpr int kExitFatal = 2;

struct RunState {
  int exit_code = kExitFatal;
  bool complete = false;
  std::string fatal_error;
  SourceSet sources;
  ErrorSnapshot initial;
  ErrorSnapshot final;
  MissingTypes missing_types;
  std::vector<SessionOutcome> outcomes;  // dispatch order, then rounds
  int rounds_used = 0;
  std::vector<RemovedDirective> cleaned_up;
  // Tool-tagged directives added by this run that are still in place.
  std::vector<Suppression> suppressions;
  std::vector<ForeignDirective> foreign_directives;
  // Errors in the final snapshot the run could not address.
  std::vector<Diagnostic> unresolved;
};

// One order per file with errors, sorted by descending error count, then
// path.
std::vector<WorkOrder> PartitionWork(const ErrorSnapshot& snapshot,
                                     int max_turns = 30, int max_attempts = 3);

// Errors an agent should see: in a tracked source file, not a missing
// declaration handled by the package manifest, not an unused directive.
ErrorSnapshot DispatchableErrors(const ErrorSnapshot& snapshot,
                                 const SourceSet& sources,
                                 const std::set<std::string>& missing_codes);

// Runs a migration of `root` for the phase in `plan`, appending to `log`.
// Expects the checker configuration to be scaffolded already. Checker
// environment failures end the run with exit status 2. An interrupt stops
// dispatching, skips cleanup and ends with status 1 and `complete` false.
// Whatever was written so far stays on disk and in the log.
RunState ExecuteRun(const RunPlan& plan, const std::filesystem::path& root,
                    EventLog& log);

Json SnapshotToJson(const ErrorSnapshot& snapshot);

}  // namespace agentic_typer

#endif  // AGENTIC_TYPER_ORCHESTRATOR_H_
