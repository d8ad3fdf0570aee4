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

#ifndef AGENTIC_TYPER_AGENT_H_
#define AGENTIC_TYPER_AGENT_H_

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "agentic_typer/checker.h"
#include "agentic_typer/event_log.h"
#include "agentic_typer/fingerprint.h"
#include "agentic_typer/suppression.h"

namespace agentic_typer {

constexpr int kProtocolVersion = 1;

struct WorkOrder {
  std::string path;
  std::vector<Diagnostic> diagnostics;  // errors in `path` only
  int attempt = 0;
  int max_turns = 30;
  int max_attempts = 3;
};

struct EditProposal {
  std::string path;
  std::string new_content;
};

enum class HookMode { kReject, kAlert };
std::string_view HookModeName(HookMode mode);
std::optional<HookMode> ParseHookMode(std::string_view name);

enum class HookReason { kNone, kBehaviorChange, kLexicalError, kForeignPath };
std::string_view HookReasonName(HookReason reason);

struct HookVerdict {
  bool accepted = false;
  HookReason reason = HookReason::kNone;
  std::optional<TokenDiff> diff;  // set whenever tokens differ from baseline
  std::string detail;
};

// The edit gate. The proposal's tokens are compared with `baseline`, the
// fingerprint taken when the run started. Equal: the file is written.
// Different: in reject mode the file is left alone, in alert mode it is
// written anyway; both report the token diff. Unlexable content and paths
// other than `owned_path` are always rejected.
HookVerdict ApplyEditHooked(const std::filesystem::path& root,
                            const std::string& owned_path,
                            const EditProposal& proposal,
                            const Fingerprint& baseline, HookMode mode);

enum class ToolName { kReadFile, kEditFile, kCheckFile, kFinish };
std::string_view ToolNameString(ToolName tool);
std::optional<ToolName> ParseToolName(std::string_view name);

struct ToolCall {
  ToolName name = ToolName::kFinish;
  Json args = Json::object();
  int64_t usage_in = 0;
  int64_t usage_out = 0;
};

// What the backend sees at each turn.
struct TurnRequest {
  std::string session;
  std::string path;
  int attempt = 0;
  int turn = 0;
  int max_turns = 0;
  std::string content;
  std::vector<Diagnostic> diagnostics;
  std::optional<HookVerdict> last_verdict;
  // Outcome of the previous tool call within this attempt.
  std::optional<ToolName> last_tool;
  Json result;  // null when absent
  std::optional<std::string> error;
};

class BackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AgentBackend {
 public:
  virtual ~AgentBackend() = default;
  // Throws BackendError on a protocol violation or transport failure.
  virtual ToolCall Next(const TurnRequest& request) = 0;
  virtual void End(std::string_view /*status*/) {}
};

using BackendFactory =
    std::function<std::unique_ptr<AgentBackend>(const std::string& session)>;

// Wire encoding, one JSON object per line.
Json DiagnosticToJson(const Diagnostic& d);
Diagnostic DiagnosticFromJson(const Json& j);
Json VerdictToJson(const HookVerdict& v);
Json TurnToJson(const TurnRequest& request);
// Throws BackendError for anything but a well-formed v1 tool frame.
ToolCall ParseToolFrame(std::string_view line);
Json ToolCallToJson(const ToolCall& call);

// Deterministic offline policy: suppress every error line, classified by
// diagnostic code.
struct ScriptedPolicy {
  std::set<std::string> bug_codes = {"TS2339", "TS2551", "TS2554", "TS2555"};
  SuppressionCategory default_category = SuppressionCategory::kValidPattern;
  std::set<std::string> missing_declaration_codes;
  std::set<std::string> skip_codes = {std::string(kUnusedDirectiveCode)};
  // Before suppressing, rewrite a one-line `@type {T}` annotation to the
  // type the checker reports for the value ("Type 'X' is not assignable to
  // type 'T'."). Only touches comments.
  bool retype_annotations = false;
};

ScriptedPolicy DefaultScriptedPolicy();

// Reads a classification map: {"bug": [codes], "valid": [codes],
// "default": "bug"|"valid", "retype_annotations": bool}. Missing keys keep
// their defaults. Throws std::runtime_error on malformed input.
ScriptedPolicy LoadClassificationMap(const std::filesystem::path& path);

SuppressionCategory Classify(const ScriptedPolicy& policy,
                             const std::vector<Diagnostic>& on_line);

// "TS2554: Expected 1 arguments, but got 2." plus " (+N more)" when several
// diagnostics share the line, and a review note for bugs.
std::string ExplanationFor(const std::vector<Diagnostic>& on_line,
                           SuppressionCategory category);

// The whole-file edit the scripted policy makes for `diagnostics`: retype
// fixes (if enabled), then one directive per remaining error line, bottom
// to top. Missing-declaration errors are left for the package manifest.
std::string ScriptedEdit(std::string_view content,
                         const std::vector<Diagnostic>& diagnostics,
                         const ScriptedPolicy& policy);

class ScriptedBackend : public AgentBackend {
 public:
  explicit ScriptedBackend(ScriptedPolicy policy) : policy_(std::move(policy)) {}
  ToolCall Next(const TurnRequest& request) override;

 private:
  ScriptedPolicy policy_;
  int attempt_ = -1;
  bool edited_ = false;
};

BackendFactory MakeScriptedBackendFactory(ScriptedPolicy policy);

// Spawns `command` (via /bin/sh -c, in `cwd`) for every session and speaks
// the line protocol over its stdin/stdout.
class ExternalBackend : public AgentBackend {
 public:
  ExternalBackend(const std::string& command, const std::filesystem::path& cwd,
                  std::chrono::milliseconds turn_timeout);
  ToolCall Next(const TurnRequest& request) override;
  void End(std::string_view status) override;

 private:
  std::unique_ptr<class LineChannel> channel_;
  std::chrono::milliseconds timeout_;
  std::string session_;
};

BackendFactory MakeExternalBackendFactory(
    std::string command, std::filesystem::path cwd,
    std::chrono::milliseconds turn_timeout = std::chrono::seconds(120));

enum class SessionStatus { kResolved, kExhausted, kBackendFailure };
std::string_view SessionStatusName(SessionStatus status);

struct TranscriptEntry {
  int attempt = 0;
  int turn = 0;
  ToolName tool = ToolName::kFinish;
  std::string path;     // file the call targeted
  std::string outcome;  // e.g. "accepted", "rejected:behavior_change"
};

struct SessionOutcome {
  std::string session;
  std::string path;
  int round = 0;
  SessionStatus status = SessionStatus::kExhausted;
  std::vector<Suppression> suppressions_added;
  std::vector<Suppression> suppressions_removed;
  int turns_used = 0;
  int attempts_used = 0;
  int64_t tokens_in = 0;
  int64_t tokens_out = 0;
  std::vector<TranscriptEntry> transcript;
  std::vector<Diagnostic> remaining;  // after the last verification
  std::string failure;
  bool interrupted = false;
};

Json SessionOutcomeToJson(const SessionOutcome& outcome);
Json SuppressionToJson(const Suppression& s);
Suppression SuppressionFromJson(const Json& j);

struct SessionContext {
  std::filesystem::path root;
  std::string session;
  int round = 0;
  const Fingerprint* baseline = nullptr;
  HookMode hook_mode = HookMode::kReject;
  Checker* checker = nullptr;
  EventLog* log = nullptr;  // optional
  const std::atomic<bool>* cancel = nullptr;  // optional
};

// Suppression directives added and removed between two versions of a file.
// `diagnostics` are the errors known for `before`; an added directive covers
// those on the (unchanged) line below it.
struct SuppressionChanges {
  std::vector<Suppression> added;
  std::vector<Suppression> removed;
};
SuppressionChanges DiffSuppressions(const std::string& path,
                                    std::string_view before,
                                    std::string_view after,
                                    const std::vector<Diagnostic>& diagnostics);

// Carries diagnostics of `before` over to the matching lines of `after`;
// diagnostics on changed lines are dropped.
std::vector<Diagnostic> RemapDiagnostics(std::string_view before,
                                         std::string_view after,
                                         const std::vector<Diagnostic>& diags);

// One work order: turns until the backend finishes or the turn budget runs
// out, then a file-scoped check; remaining errors start the next attempt.
SessionOutcome RunSession(const WorkOrder& order, AgentBackend& backend,
                          const SessionContext& context);

}  // namespace agentic_typer

#endif  // AGENTIC_TYPER_AGENT_H_
