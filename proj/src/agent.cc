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

#include "agentic_typer/agent.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>

#include "agentic_typer/sequence_diff.h"
#include "agentic_typer/subprocess.h"
#include "agentic_typer/text.h"
#include "agentic_typer/workspace.h"

namespace agentic_typer {

std::string_view HookModeName(HookMode mode) {
  return mode == HookMode::kReject ? "reject" : "alert";
}

std::optional<HookMode> ParseHookMode(std::string_view name) {
  if (name == "reject") return HookMode::kReject;
  if (name == "alert") return HookMode::kAlert;
  return std::nullopt;
}

std::string_view HookReasonName(HookReason reason) {
  switch (reason) {
    case HookReason::kNone:
      return "none";
    case HookReason::kBehaviorChange:
      return "behavior_change";
    case HookReason::kLexicalError:
      return "lexical_error";
    case HookReason::kForeignPath:
      return "foreign_path";
  }
  return "none";
}

namespace {

std::string NormalizeRelative(std::string_view path) {
  return std::filesystem::path(path).lexically_normal().generic_string();
}

bool IsOwnedPath(std::string_view candidate, const std::string& owned) {
  const std::filesystem::path p(candidate);
  if (p.is_absolute()) return false;
  const std::string norm = NormalizeRelative(candidate);
  if (norm.starts_with("../") || norm == "..") return false;
  return norm == NormalizeRelative(owned);
}

}  // namespace

HookVerdict ApplyEditHooked(const std::filesystem::path& root,
                            const std::string& owned_path,
                            const EditProposal& proposal,
                            const Fingerprint& baseline, HookMode mode) {
  HookVerdict v;
  if (!IsOwnedPath(proposal.path, owned_path)) {
    v.reason = HookReason::kForeignPath;
    v.detail = "session owns " + owned_path + ", not " + proposal.path;
    return v;
  }
  Fingerprint proposed;
  try {
    proposed = ComputeFingerprint(proposal.new_content);
  } catch (const LexError& e) {
    v.reason = HookReason::kLexicalError;
    v.detail = e.what();
    return v;
  }
  if (!(proposed == baseline)) {
    v.reason = HookReason::kBehaviorChange;
    v.diff = DiffTokens(baseline, proposed);
    v.detail = RenderTokenDiff(*v.diff);
    if (v.detail.ends_with('\n')) v.detail.pop_back();
    if (mode == HookMode::kReject) return v;
  }
  WriteFileAtomic(root / owned_path, proposal.new_content);
  v.accepted = true;
  return v;
}

std::string_view ToolNameString(ToolName tool) {
  switch (tool) {
    case ToolName::kReadFile:
      return "read_file";
    case ToolName::kEditFile:
      return "edit_file";
    case ToolName::kCheckFile:
      return "check_file";
    case ToolName::kFinish:
      return "finish";
  }
  return "finish";
}

std::optional<ToolName> ParseToolName(std::string_view name) {
  for (ToolName t : {ToolName::kReadFile, ToolName::kEditFile,
                     ToolName::kCheckFile, ToolName::kFinish}) {
    if (ToolNameString(t) == name) return t;
  }
  return std::nullopt;
}

Json DiagnosticToJson(const Diagnostic& d) {
  Json j = Json::object();
  j["path"] = d.path;
  j["line"] = d.line;
  j["column"] = d.column;
  j["code"] = d.code;
  j["message"] = d.message;
  j["severity"] = d.severity == Severity::kError ? "error" : "warning";
  return j;
}

Diagnostic DiagnosticFromJson(const Json& j) {
  Diagnostic d;
  d.path = j.at("path").get<std::string>();
  d.line = j.at("line").get<int>();
  d.column = j.at("column").get<int>();
  d.code = j.at("code").get<std::string>();
  d.message = j.at("message").get<std::string>();
  d.severity = j.value("severity", std::string("error")) == "warning"
                   ? Severity::kWarning
                   : Severity::kError;
  return d;
}

namespace {

Json LexemesToJson(const std::vector<Token>& tokens) {
  Json out = Json::array();
  for (const Token& t : tokens) out.push_back(t.lexeme);
  return out;
}

std::string_view EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kInsert:
      return "insert";
    case EditKind::kDelete:
      return "delete";
    case EditKind::kReplace:
      return "replace";
  }
  return "replace";
}

}  // namespace

Json VerdictToJson(const HookVerdict& v) {
  Json j = Json::object();
  j["accepted"] = v.accepted;
  j["reason"] = HookReasonName(v.reason);
  j["detail"] = v.detail;
  Json edits = Json::array();
  if (v.diff) {
    for (const TokenEdit& e : v.diff->edits) {
      Json je = Json::object();
      je["op"] = EditKindName(e.kind);
      je["line"] = e.line;
      je["position"] = e.position;
      je["removed"] = LexemesToJson(e.removed);
      je["added"] = LexemesToJson(e.added);
      je["text"] = RenderEdit(e);
      edits.push_back(std::move(je));
    }
  }
  j["diff"] = std::move(edits);
  return j;
}

Json TurnToJson(const TurnRequest& r) {
  Json j = Json::object();
  j["v"] = kProtocolVersion;
  j["type"] = "turn";
  j["session"] = r.session;
  j["file"] = r.path;
  j["attempt"] = r.attempt;
  j["turn"] = r.turn;
  j["max_turns"] = r.max_turns;
  j["content"] = r.content;
  Json diags = Json::array();
  for (const Diagnostic& d : r.diagnostics) diags.push_back(DiagnosticToJson(d));
  j["diagnostics"] = std::move(diags);
  if (r.last_verdict) j["last_verdict"] = VerdictToJson(*r.last_verdict);
  if (r.last_tool) j["tool"] = ToolNameString(*r.last_tool);
  if (!r.result.is_null()) j["result"] = r.result;
  if (r.error) j["error"] = *r.error;
  return j;
}

ToolCall ParseToolFrame(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::exception&) {
    throw BackendError("backend sent malformed JSON");
  }
  if (!j.is_object()) throw BackendError("backend frame is not an object");
  if (!j.contains("v") || j["v"] != kProtocolVersion) {
    throw BackendError("backend frame has unsupported protocol version");
  }
  if (j.value("type", "") != "tool") {
    throw BackendError("backend frame is not a tool call");
  }
  if (!j.contains("name") || !j["name"].is_string()) {
    throw BackendError("tool call has no name");
  }
  const auto name = ParseToolName(j["name"].get<std::string>());
  if (!name) {
    throw BackendError("unknown tool " + j["name"].get<std::string>());
  }
  ToolCall call;
  call.name = *name;
  if (j.contains("args")) {
    if (!j["args"].is_object()) throw BackendError("tool args must be an object");
    call.args = j["args"];
  }
  if (j.contains("usage")) {
    const Json& u = j["usage"];
    if (!u.is_object()) throw BackendError("usage must be an object");
    for (const char* key : {"in", "out"}) {
      if (!u.contains(key)) continue;
      if (!u[key].is_number_integer() || u[key].get<int64_t>() < 0) {
        throw BackendError(std::string("usage.") + key +
                           " must be a non-negative integer");
      }
    }
    call.usage_in = u.value("in", int64_t{0});
    call.usage_out = u.value("out", int64_t{0});
  }
  return call;
}

Json ToolCallToJson(const ToolCall& call) {
  Json j = Json::object();
  j["v"] = kProtocolVersion;
  j["type"] = "tool";
  j["name"] = ToolNameString(call.name);
  j["args"] = call.args;
  j["usage"] = {{"in", call.usage_in}, {"out", call.usage_out}};
  return j;
}

ScriptedPolicy DefaultScriptedPolicy() {
  ScriptedPolicy p;
  p.missing_declaration_codes = DefaultMissingDeclarationCodes();
  return p;
}

ScriptedPolicy LoadClassificationMap(const std::filesystem::path& path) {
  ScriptedPolicy p = DefaultScriptedPolicy();
  Json j;
  try {
    j = Json::parse(ReadFileOrThrow(path));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  if (!j.is_object()) {
    throw std::runtime_error(path.string() + ": expected an object");
  }
  auto codes = [&](const char* key) {
    std::set<std::string> out;
    const Json& list = j[key];
    if (!list.is_array()) {
      throw std::runtime_error(path.string() + ": \"" + key +
                               "\" must be a list of codes");
    }
    for (const Json& c : list) {
      if (!c.is_string()) {
        throw std::runtime_error(path.string() + ": codes must be strings");
      }
      out.insert(c.get<std::string>());
    }
    return out;
  };
  if (j.contains("bug")) p.bug_codes = codes("bug");
  if (j.contains("valid")) {
    for (const std::string& c : codes("valid")) p.bug_codes.erase(c);
  }
  if (j.contains("default")) {
    const auto c = j["default"].is_string()
                       ? ParseCategoryTag(j["default"].get<std::string>())
                       : std::nullopt;
    if (!c) {
      throw std::runtime_error(path.string() +
                               ": \"default\" must be \"bug\" or \"valid\"");
    }
    p.default_category = *c;
  }
  if (j.contains("retype_annotations")) {
    if (!j["retype_annotations"].is_boolean()) {
      throw std::runtime_error(path.string() +
                               ": \"retype_annotations\" must be a boolean");
    }
    p.retype_annotations = j["retype_annotations"].get<bool>();
  }
  return p;
}

SuppressionCategory Classify(const ScriptedPolicy& policy,
                             const std::vector<Diagnostic>& on_line) {
  for (const Diagnostic& d : on_line) {
    if (policy.bug_codes.count(d.code)) return SuppressionCategory::kBug;
  }
  return policy.default_category;
}

std::string ExplanationFor(const std::vector<Diagnostic>& on_line,
                           SuppressionCategory category) {
  std::vector<std::string> codes;
  for (const Diagnostic& d : on_line) {
    if (std::find(codes.begin(), codes.end(), d.code) == codes.end()) {
      codes.push_back(d.code);
    }
  }
  std::string out;
  for (size_t i = 0; i < codes.size(); ++i) {
    if (i) out += ", ";
    out += codes[i];
  }
  out += ": ";
  std::string message;
  if (!on_line.empty()) {
    const std::string& m = on_line.front().message;
    message = SanitizeExplanation(m.substr(0, m.find('\n')), "type error");
  }
  constexpr size_t kMaxMessage = 160;
  if (message.size() > kMaxMessage) {
    message.resize(kMaxMessage - 3);
    message += "...";
  }
  out += message;
  if (on_line.size() > 1) {
    out += " (+" + std::to_string(on_line.size() - 1) + " more)";
  }
  if (category == SuppressionCategory::kBug) out += " Likely defect, review.";
  return out;
}

namespace {

// [offset, offset + length) of 1-based `line`, without its terminator.
std::optional<std::pair<size_t, size_t>> LineSpan(std::string_view content,
                                                  int line) {
  size_t off = 0;
  for (int l = 1; l < line; ++l) {
    const size_t nl = content.find('\n', off);
    if (nl == std::string_view::npos) return std::nullopt;
    off = nl + 1;
  }
  if (off > content.size()) return std::nullopt;
  size_t end = content.find('\n', off);
  if (end == std::string_view::npos) end = content.size();
  if (end > off && content[end - 1] == '\r') --end;
  return std::make_pair(off, end - off);
}

bool IsPlainTypeName(const std::string& t) {
  if (t.empty() || t == "any" || t == "never" || t == "unknown") return false;
  return std::all_of(t.begin(), t.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '$' || c == '.' || c == '<' || c == '>' || c == '[' ||
           c == ']' || c == '|' || c == ',' || c == ' ';
  });
}

// Rewrites `@type {declared}` to `@type {actual}` on the diagnostic's line
// (left of the reported column) or in a one-line JSDoc comment right above.
bool TryRetype(std::string& content, const Diagnostic& d) {
  static const std::regex kAssign(
      R"(^Type '([^']+)' is not assignable to type '([^']+)'\.$)");
  std::smatch m;
  if (d.message.find('\n') != std::string::npos ||
      !std::regex_match(d.message, m, kAssign)) {
    return false;
  }
  const std::string actual = m[1], declared = m[2];
  if (!IsPlainTypeName(actual) || !IsPlainTypeName(declared)) return false;
  const std::string from = "@type {" + declared + "}";
  const std::string to = "@type {" + actual + "}";
  auto rewrite = [&](int line, size_t limit) {
    const auto span = LineSpan(content, line);
    if (!span) return false;
    const std::string_view text =
        std::string_view(content).substr(span->first,
                                         std::min(span->second, limit));
    const size_t at = text.find(from);
    if (at == std::string_view::npos) return false;
    // The annotation must sit in a block comment opened on this line.
    const size_t open = text.rfind("/**", at);
    if (open == std::string_view::npos ||
        text.substr(open, at - open).find("*/") != std::string_view::npos) {
      return false;
    }
    content.replace(span->first + at, from.size(), to);
    return true;
  };
  if (rewrite(d.line, d.column > 0 ? d.column - 1 : 0)) return true;
  if (d.line > 1) {
    const auto above = LineSpan(content, d.line - 1);
    if (!above) return false;
    const std::string_view t = TrimWhitespace(
        std::string_view(content).substr(above->first, above->second));
    if (t.starts_with("/**") && t.ends_with("*/")) {
      return rewrite(d.line - 1, std::string::npos);
    }
  }
  return false;
}

}  // namespace

std::string ScriptedEdit(std::string_view content,
                         const std::vector<Diagnostic>& diagnostics,
                         const ScriptedPolicy& policy) {
  std::string out(content);
  std::map<int, std::vector<Diagnostic>> by_line;
  for (const Diagnostic& d : diagnostics) {
    if (d.severity != Severity::kError || policy.skip_codes.count(d.code)) {
      continue;
    }
    if (MissingModuleName(d, policy.missing_declaration_codes)) continue;
    if (policy.retype_annotations && TryRetype(out, d)) continue;
    by_line[d.line].push_back(d);
  }
  for (auto it = by_line.rbegin(); it != by_line.rend(); ++it) {
    std::vector<Diagnostic>& on_line = it->second;
    std::stable_sort(on_line.begin(), on_line.end(),
                     [](const Diagnostic& a, const Diagnostic& b) {
                       return a.column < b.column;
                     });
    Suppression s;
    s.category = Classify(policy, on_line);
    s.explanation = ExplanationFor(on_line, s.category);
    try {
      out = InsertSuppression(out, it->first, s);
    } catch (const SuppressionError&) {
      // Left for the next attempt or reported as unresolved.
    }
  }
  return out;
}

ToolCall ScriptedBackend::Next(const TurnRequest& request) {
  if (request.attempt != attempt_) {
    attempt_ = request.attempt;
    edited_ = false;
  }
  ToolCall call;
  if (!edited_) {
    edited_ = true;
    std::string updated =
        ScriptedEdit(request.content, request.diagnostics, policy_);
    if (updated != request.content) {
      call.name = ToolName::kEditFile;
      call.args = {{"path", request.path}, {"content", std::move(updated)}};
      return call;
    }
  }
  call.name = ToolName::kFinish;
  return call;
}

BackendFactory MakeScriptedBackendFactory(ScriptedPolicy policy) {
  return [policy = std::move(policy)](const std::string&) {
    return std::make_unique<ScriptedBackend>(policy);
  };
}

ExternalBackend::ExternalBackend(const std::string& command,
                                 const std::filesystem::path& cwd,
                                 std::chrono::milliseconds turn_timeout)
    : channel_(std::make_unique<LineChannel>(command, cwd)),
      timeout_(turn_timeout) {}

ToolCall ExternalBackend::Next(const TurnRequest& request) {
  session_ = request.session;
  if (!channel_->WriteLine(TurnToJson(request).dump())) {
    throw BackendError("backend closed its input");
  }
  const auto line = channel_->ReadLine(timeout_);
  if (!line) {
    throw BackendError(channel_->timed_out() ? "backend timed out"
                                             : "backend exited");
  }
  return ParseToolFrame(*line);
}

void ExternalBackend::End(std::string_view status) {
  Json j = {{"v", kProtocolVersion},
            {"type", "end"},
            {"session", session_},
            {"status", status}};
  channel_->WriteLine(j.dump());
}

BackendFactory MakeExternalBackendFactory(
    std::string command, std::filesystem::path cwd,
    std::chrono::milliseconds turn_timeout) {
  return [command = std::move(command), cwd = std::move(cwd),
          turn_timeout](const std::string&) -> std::unique_ptr<AgentBackend> {
    try {
      return std::make_unique<ExternalBackend>(command, cwd, turn_timeout);
    } catch (const std::exception& e) {
      throw BackendError(std::string("cannot start backend: ") + e.what());
    }
  };
}

std::string_view SessionStatusName(SessionStatus status) {
  switch (status) {
    case SessionStatus::kResolved:
      return "resolved";
    case SessionStatus::kExhausted:
      return "exhausted";
    case SessionStatus::kBackendFailure:
      return "backend_failure";
  }
  return "exhausted";
}

Json SuppressionToJson(const Suppression& s) {
  Json j = Json::object();
  j["path"] = s.path;
  j["anchor_line"] = s.anchor_line;
  j["category"] = CategoryTag(s.category);
  j["explanation"] = s.explanation;
  j["suppressed_codes"] = s.suppressed_codes;
  Json covered = Json::array();
  for (const Diagnostic& d : s.covered) covered.push_back(DiagnosticToJson(d));
  j["covered"] = std::move(covered);
  j["anchor_content_hash"] = s.anchor_content_hash;
  return j;
}

Suppression SuppressionFromJson(const Json& j) {
  Suppression s;
  s.path = j.at("path").get<std::string>();
  s.anchor_line = j.at("anchor_line").get<int>();
  const auto c = ParseCategoryTag(j.at("category").get<std::string>());
  if (!c) throw std::runtime_error("unknown suppression category");
  s.category = *c;
  s.explanation = j.at("explanation").get<std::string>();
  s.suppressed_codes =
      j.value("suppressed_codes", std::vector<std::string>{});
  if (j.contains("covered")) {
    for (const Json& d : j["covered"]) s.covered.push_back(DiagnosticFromJson(d));
  }
  s.anchor_content_hash = j.value("anchor_content_hash", "");
  return s;
}

Json SessionOutcomeToJson(const SessionOutcome& o) {
  Json j = Json::object();
  j["session"] = o.session;
  j["path"] = o.path;
  j["round"] = o.round;
  j["status"] = SessionStatusName(o.status);
  j["turns_used"] = o.turns_used;
  j["attempts_used"] = o.attempts_used;
  j["tokens_in"] = o.tokens_in;
  j["tokens_out"] = o.tokens_out;
  Json added = Json::array(), removed = Json::array();
  for (const Suppression& s : o.suppressions_added) {
    added.push_back(SuppressionToJson(s));
  }
  for (const Suppression& s : o.suppressions_removed) {
    removed.push_back(SuppressionToJson(s));
  }
  j["suppressions_added"] = std::move(added);
  j["suppressions_removed"] = std::move(removed);
  Json remaining = Json::array();
  for (const Diagnostic& d : o.remaining) remaining.push_back(DiagnosticToJson(d));
  j["remaining"] = std::move(remaining);
  Json transcript = Json::array();
  for (const TranscriptEntry& t : o.transcript) {
    transcript.push_back({{"attempt", t.attempt},
                          {"turn", t.turn},
                          {"tool", ToolNameString(t.tool)},
                          {"path", t.path},
                          {"outcome", t.outcome}});
  }
  j["transcript"] = std::move(transcript);
  if (!o.failure.empty()) j["failure"] = o.failure;
  if (o.interrupted) j["interrupted"] = true;
  return j;
}

namespace {

// Old line index (0-based) for every new line that was kept, or -1.
std::vector<long> KeptLineMap(const std::vector<std::string_view>& a,
                              const std::vector<std::string_view>& b) {
  std::vector<long> map(b.size(), -1);
  for (const DiffOp& op : SequenceDiff<std::string_view>(a, b)) {
    if (op.kind != DiffOpKind::kKeep) continue;
    for (size_t k = 0; k < op.a_end - op.a_begin; ++k) {
      map[op.b_begin + k] = static_cast<long>(op.a_begin + k);
    }
  }
  return map;
}

}  // namespace

std::vector<Diagnostic> RemapDiagnostics(std::string_view before,
                                         std::string_view after,
                                         const std::vector<Diagnostic>& diags) {
  if (before == after) return diags;
  const auto a = SplitLines(before), b = SplitLines(after);
  const std::vector<long> map = KeptLineMap(a, b);
  std::map<long, int> old_to_new;
  for (size_t j = 0; j < map.size(); ++j) {
    if (map[j] >= 0) old_to_new[map[j]] = static_cast<int>(j) + 1;
  }
  std::vector<Diagnostic> out;
  for (const Diagnostic& d : diags) {
    const auto it = old_to_new.find(d.line - 1);
    if (it == old_to_new.end()) continue;
    Diagnostic moved = d;
    moved.line = it->second;
    out.push_back(std::move(moved));
  }
  return out;
}

SuppressionChanges DiffSuppressions(const std::string& path,
                                    std::string_view before,
                                    std::string_view after,
                                    const std::vector<Diagnostic>& diagnostics) {
  SuppressionChanges changes;
  if (before == after) return changes;
  const auto a = SplitLines(before), b = SplitLines(after);
  const std::vector<long> map = KeptLineMap(a, b);
  std::vector<bool> old_kept(a.size(), false);
  for (long i : map) {
    if (i >= 0) old_kept[i] = true;
  }
  for (const Suppression& s : ScanContent(path, after).tagged) {
    const size_t directive = static_cast<size_t>(s.anchor_line) - 2;
    if (map[directive] >= 0) continue;  // was already there
    Suppression added = s;
    const size_t anchor = directive + 1;
    if (anchor < map.size() && map[anchor] >= 0) {
      const int old_line = static_cast<int>(map[anchor]) + 1;
      for (const Diagnostic& d : diagnostics) {
        if (d.line == old_line && d.severity == Severity::kError) {
          added.covered.push_back(d);
          added.covered.back().path = path;
        }
      }
    }
    if (!added.covered.empty()) {
      std::vector<std::string> codes;
      for (const Diagnostic& d : added.covered) {
        if (std::find(codes.begin(), codes.end(), d.code) == codes.end()) {
          codes.push_back(d.code);
        }
      }
      added.suppressed_codes = std::move(codes);
    }
    changes.added.push_back(std::move(added));
  }
  for (const Suppression& s : ScanContent(path, before).tagged) {
    const size_t directive = static_cast<size_t>(s.anchor_line) - 2;
    if (!old_kept[directive]) changes.removed.push_back(s);
  }
  return changes;
}

namespace {

bool SameDirective(const Suppression& a, const Suppression& b) {
  return a.explanation == b.explanation && a.category == b.category &&
         a.anchor_content_hash == b.anchor_content_hash;
}

std::vector<Diagnostic> ErrorsOf(const ErrorSnapshot& snapshot,
                                 const std::string& path) {
  const auto it = snapshot.by_file.find(path);
  return it == snapshot.by_file.end() ? std::vector<Diagnostic>{} : it->second;
}

}  // namespace

SessionOutcome RunSession(const WorkOrder& order, AgentBackend& backend,
                          const SessionContext& ctx) {
  SessionOutcome outcome;
  outcome.session = ctx.session;
  outcome.path = order.path;
  outcome.round = ctx.round;
  outcome.remaining = order.diagnostics;
  if (order.diagnostics.empty()) {
    outcome.status = SessionStatus::kResolved;
    return outcome;
  }
  const std::filesystem::path file = ctx.root / order.path;
  std::string current = ReadFileOrThrow(file);
  // Errors known for `current`, with lines kept in step with accepted edits.
  std::vector<Diagnostic> known = order.diagnostics;
  std::optional<HookVerdict> last_verdict;

  auto record_changes = [&](const SuppressionChanges& changes) {
    for (const Suppression& r : changes.removed) {
      auto it = std::find_if(
          outcome.suppressions_added.begin(), outcome.suppressions_added.end(),
          [&](const Suppression& s) { return SameDirective(s, r); });
      if (it != outcome.suppressions_added.end()) {
        outcome.suppressions_added.erase(it);
      } else {
        outcome.suppressions_removed.push_back(r);
      }
    }
    for (const Suppression& s : changes.added) {
      outcome.suppressions_added.push_back(s);
    }
  };

  bool failed = false;
  for (int attempt = order.attempt; attempt < order.max_attempts && !failed;
       ++attempt) {
    outcome.attempts_used++;
    TurnRequest request;
    request.session = ctx.session;
    request.path = order.path;
    request.attempt = attempt;
    request.max_turns = order.max_turns;
    for (int turn = 0; turn < order.max_turns; ++turn) {
      if (ctx.cancel && ctx.cancel->load()) {
        outcome.interrupted = true;
        break;
      }
      request.turn = turn;
      request.content = current;
      request.diagnostics = known;
      request.last_verdict = last_verdict;
      ToolCall call;
      try {
        call = backend.Next(request);
      } catch (const std::exception& e) {
        outcome.failure = e.what();
        failed = true;
        break;
      }
      outcome.turns_used++;
      outcome.tokens_in += call.usage_in;
      outcome.tokens_out += call.usage_out;
      request.last_tool = call.name;
      request.result = nullptr;
      request.error.reset();
      TranscriptEntry entry{attempt, turn, call.name, order.path, "ok"};
      const std::string target =
          call.args.is_object() && call.args.contains("path") &&
                  call.args["path"].is_string()
              ? call.args["path"].get<std::string>()
              : order.path;
      entry.path = target;

      if (call.name == ToolName::kFinish) {
        entry.outcome = "finished";
        outcome.transcript.push_back(entry);
        break;
      }
      if (call.name == ToolName::kEditFile) {
        if (!call.args.contains("content") || !call.args["content"].is_string()) {
          outcome.failure = "edit_file without string content";
          failed = true;
          entry.outcome = "protocol_violation";
          outcome.transcript.push_back(entry);
          break;
        }
        EditProposal proposal{target, call.args["content"].get<std::string>()};
        HookVerdict verdict = ApplyEditHooked(ctx.root, order.path, proposal,
                                              *ctx.baseline, ctx.hook_mode);
        if (ctx.log) {
          Json payload = {{"session", ctx.session},
                          {"path", order.path},
                          {"target", target},
                          {"attempt", attempt},
                          {"turn", turn}};
          Json detail = VerdictToJson(verdict);
          for (auto& [k, v] : detail.items()) payload[k] = v;
          ctx.log->Append("hook_verdict", std::move(payload));
        }
        if (verdict.accepted) {
          record_changes(DiffSuppressions(order.path, current,
                                          proposal.new_content, known));
          known = RemapDiagnostics(current, proposal.new_content, known);
          current = std::move(proposal.new_content);
        }
        entry.outcome = verdict.accepted
                            ? std::string("accepted")
                            : "rejected:" +
                                  std::string(HookReasonName(verdict.reason));
        if (verdict.accepted && verdict.reason != HookReason::kNone) {
          entry.outcome = "accepted:" + std::string(HookReasonName(verdict.reason));
        }
        request.result = VerdictToJson(verdict);
        last_verdict = std::move(verdict);
      } else if (!IsOwnedPath(target, order.path)) {
        request.error = "session owns " + order.path + ", not " + target;
        entry.outcome = "error:foreign_path";
      } else if (call.name == ToolName::kReadFile) {
        request.result = {{"path", order.path}, {"content", current}};
      } else {  // kCheckFile
        known = ErrorsOf(ctx.checker->CheckFile(order.path), order.path);
        Json diags = Json::array();
        for (const Diagnostic& d : known) diags.push_back(DiagnosticToJson(d));
        request.result = {{"path", order.path}, {"diagnostics", diags}};
      }
      outcome.transcript.push_back(std::move(entry));
    }
    if (failed || outcome.interrupted) break;
    known = ErrorsOf(ctx.checker->CheckFile(order.path), order.path);
    outcome.remaining = known;
    if (known.empty()) {
      outcome.status = SessionStatus::kResolved;
      break;
    }
  }
  if (failed) {
    outcome.status = SessionStatus::kBackendFailure;
    outcome.remaining = known;
  } else if (outcome.interrupted) {
    outcome.status = SessionStatus::kExhausted;
    outcome.remaining = known;
  }
  try {
    backend.End(SessionStatusName(outcome.status));
  } catch (const std::exception&) {
  }
  return outcome;
}

}  // namespace agentic_typer
