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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "agentic_typer/agent.h"
#include "agentic_typer/checker.h"
#include "agentic_typer/fingerprint.h"
#include "agentic_typer/orchestrator.h"
#include "agentic_typer/report.h"
#include "agentic_typer/suppression.h"
#include "agentic_typer/workspace.h"
#include "properties.h"
#include "testing.h"

namespace agentic_typer {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Tolerances.
constexpr double kTableBudgetSeconds = 1.0;
constexpr double kCorpusBudgetSeconds = 60.0;
constexpr double kPropertyBudgetSeconds = 30.0;
constexpr int kPropertyTrials = 1000;
constexpr int kCascadeRounds = 3;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", seconds);
  return buf;
}

std::vector<Json> EventsOf(const EventLog& log, const std::string& type) {
  std::vector<Json> out;
  for (const Json& e : log.events()) {
    if (e["type"] == type) out.push_back(e);
  }
  return out;
}

// A fixture copied into a fresh directory with the minimal configuration.
struct Workspace {
  explicit Workspace(const std::string& fixture) {
    testing::CopyFixture(fixture, dir.path());
    ScaffoldConfig(Phase::kMinimalSetup, dir.path());
  }
  testing::TempDir dir;
};

RunReport Row(std::string repo, int64_t loc, int64_t errors, int64_t necessary,
              int64_t additional, int64_t seconds, int64_t cents) {
  RunReport r;
  r.repo = std::move(repo);
  r.loc = loc;
  r.initial_errors = errors;
  r.suppressions_total = necessary + additional;
  r.necessary = necessary;
  r.additional = additional;
  r.wall_seconds = seconds;
  r.cost_cents = cents;
  r.complete = true;
  return r;
}

Outcome TableArithmetic() {
  Outcome o;
  const auto start = Clock::now();
  const std::vector<RunReport> rows = {Row("A", 75000, 570, 327, 26, 1011, 2285),
                                       Row("B", 6000, 63, 56, 0, 186, 208)};
  const RunReport total = SumReports(rows);
  o.Require(FormatAdditional(327, 26) == "+26 (+8.0%)", "row A percentage");
  o.Require(FormatAdditional(56, 0) == "+0 (+0.0%)", "row B percentage");
  o.Require(total.initial_errors == 633, "total errors");
  o.Require(total.necessary == 383, "total necessary");
  o.Require(total.additional == 26, "total additional");
  o.Require(FormatAdditional(*total.necessary, *total.additional) == "+26 (+6.8%)",
            "total percentage");
  o.Require(FormatWallTime(total.wall_seconds) == "19:57", "total time");
  o.Require(FormatCost(total.cost_cents) == "$24.93", "total cost");
  o.Require(FormatLoc(total.loc) == "81K", "total LOC");
  const std::string table = RenderTable(rows);
  for (const char* cell : {"+8.0%", "+0.0%", "+6.8%", "633", "383", "+26",
                           "19:57", "$24.93"}) {
    o.Require(table.find(cell) != std::string::npos,
              std::string("table lacks ") + cell);
  }
  const double secs = Seconds(start);
  o.Require(secs < kTableBudgetSeconds, "took " + Fmt(secs));
  if (o.pass) o.detail = "all derived cells exact in " + Fmt(secs);
  return o;
}

struct CorpusRun {
  std::string name;
  std::map<std::string, std::string> before;
  std::map<std::string, std::string> after;
  RunState state;
  double seconds = 0;
  size_t final_unused = 0;
};

std::vector<CorpusRun>& CorpusRuns() {
  static std::vector<CorpusRun> runs;
  return runs;
}

Outcome ZeroErrorRuns() {
  Outcome o;
  std::ostringstream summary;
  for (const char* name : {"corpus_small", "corpus_medium", "corpus_large"}) {
    Workspace ws(name);
    CorpusRun run;
    run.name = name;
    run.before = testing::TreeContents(ws.dir.path());
    EventLog log;
    const auto start = Clock::now();
    run.state = ExecuteRun(RunPlan{}, ws.dir.path(), log);
    run.seconds = Seconds(start);
    run.after = testing::TreeContents(ws.dir.path());
    // Independent final check with a fresh checker.
    const ErrorSnapshot final_check = Checker(ws.dir.path()).Check();
    for (const Diagnostic& d : final_check.errors()) {
      if (d.code == kUnusedDirectiveCode) ++run.final_unused;
    }
    o.Require(run.state.exit_code == kExitClean,
              std::string(name) + ": exit " + std::to_string(run.state.exit_code));
    o.Require(final_check.total == 0, std::string(name) + ": " +
                                          std::to_string(final_check.total) +
                                          " errors remain");
    o.Require(run.final_unused == 0, std::string(name) + ": unused directives");
    o.Require(run.seconds < kCorpusBudgetSeconds,
              std::string(name) + " took " + Fmt(run.seconds));
    if (!summary.str().empty()) summary << "; ";
    summary << name << " " << run.state.initial.total << "->" << final_check.total
            << " in " << Fmt(run.seconds);
    CorpusRuns().push_back(std::move(run));
  }
  if (o.pass) o.detail = summary.str();
  return o;
}

std::string NonCommentText(const std::string& source) {
  std::string out;
  for (const Token& t : LexCanonical(source)) {
    out += t.lexeme;
    out += '\n';
  }
  return out;
}

Outcome BehaviorPreserved() {
  Outcome o;
  size_t files = 0;
  for (const CorpusRun& run : CorpusRuns()) {
    for (const auto& [path, before] : run.before) {
      if (!path.ends_with(".js")) continue;
      const auto it = run.after.find(path);
      if (it == run.after.end()) {
        o.Require(false, run.name + "/" + path + " vanished");
        continue;
      }
      ++files;
      o.Require(ComputeFingerprint(before) == ComputeFingerprint(it->second),
                run.name + "/" + path + ": fingerprint changed");
      o.Require(NonCommentText(before) == NonCommentText(it->second),
                run.name + "/" + path + ": non-comment tokens differ");
    }
  }
  o.Require(files > 0, "no files checked");
  if (o.pass) o.detail = std::to_string(files) + " files unchanged outside comments";
  return o;
}

Outcome FingerprintProperties() {
  Outcome o;
  const auto start = Clock::now();
  using Check = std::optional<std::string> (*)(uint32_t);
  const std::pair<const char*, Check> suites[] = {
      {"comment invariance", testing::CheckCommentInvariance},
      {"mutation sensitivity", testing::CheckMutationSensitivity},
      {"diff apply soundness", testing::CheckDiffApplySoundness},
  };
  for (const auto& [label, check] : suites) {
    for (int i = 0; i < kPropertyTrials; ++i) {
      const uint32_t seed = 700000u + static_cast<uint32_t>(i);
      if (const auto failure = check(seed)) {
        o.Require(false, std::string(label) + " seed " + std::to_string(seed) +
                             ": " + *failure);
        break;
      }
    }
  }
  const double secs = Seconds(start);
  o.Require(secs < kPropertyBudgetSeconds, "took " + Fmt(secs));
  if (o.pass) {
    o.detail = "3 x " + std::to_string(kPropertyTrials) + " trials in " + Fmt(secs);
  }
  return o;
}

Outcome ParallelDeterminism() {
  Outcome o;
  std::map<std::string, std::string> trees[2];
  Json manifests[2];
  const int widths[2] = {1, 10};
  for (int i = 0; i < 2; ++i) {
    Workspace ws("corpus_medium");
    RunPlan plan;
    plan.parallelism = widths[i];
    EventLog log;
    const RunState s = ExecuteRun(plan, ws.dir.path(), log);
    o.Require(s.exit_code == kExitClean, "K=" + std::to_string(widths[i]) +
                                             " exit " + std::to_string(s.exit_code));
    trees[i] = testing::TreeContents(ws.dir.path());
    manifests[i] = SuppressionManifest(s.suppressions);
  }
  o.Require(trees[0] == trees[1], "final trees differ");
  o.Require(manifests[0] == manifests[1], "suppression manifests differ");
  if (o.pass) {
    o.detail = std::to_string(trees[0].size()) + " files and " +
               std::to_string(manifests[0].size()) +
               " suppressions identical for K=1 and K=10";
  }
  return o;
}

Outcome CascadeConverges() {
  Outcome o;
  Workspace ws("cascade");
  RunPlan plan;
  plan.verification_rounds = kCascadeRounds;
  plan.policy.retype_annotations = true;
  EventLog log;
  const RunState s = ExecuteRun(plan, ws.dir.path(), log);
  o.Require(s.exit_code == kExitClean, "exit " + std::to_string(s.exit_code));
  o.Require(s.final.total == 0, std::to_string(s.final.total) + " errors remain");
  o.Require(s.rounds_used <= kCascadeRounds, "too many rounds");
  int b_sessions = 0;
  for (const Json& e : EventsOf(log, "session_started")) {
    if (e["path"] != "b.js") continue;
    ++b_sessions;
    o.Require(e["round"].get<int>() >= 1, "b.js dispatched in round 0");
  }
  o.Require(b_sessions > 0, "b.js never dispatched");
  if (o.pass) {
    o.detail = "0 errors after " + std::to_string(s.rounds_used) +
               " verification round(s); b.js first seen in a verification round";
  }
  return o;
}

Outcome GoldenRoundTrip() {
  Outcome o;
  const std::string text =
      testing::ReadFile(testing::GoldenDir() / "checker_output.txt");
  const Json expected =
      testing::ReadJson(testing::GoldenDir() / "checker_output.expected.json");
  const CheckerOutput parsed = ParseCheckerOutput(text);
  o.Require(RenderCheckerOutput(parsed) == text, "render is not byte-exact");
  const auto diags = parsed.diagnostics();
  size_t continuation = 0;
  for (const Diagnostic& d : diags) {
    continuation += std::count(d.message.begin(), d.message.end(), '\n');
  }
  o.Require(diags.size() == expected["diagnostics"].get<size_t>(),
            "diagnostic count");
  o.Require(continuation == expected["continuation_lines"].get<size_t>(),
            "continuation lines");
  o.Require(parsed.other_lines().size() == expected["other_nonblank"].get<size_t>(),
            "summary lines");
  const size_t lines = diags.size() + continuation + parsed.other_lines().size();
  o.Require(lines >= 50, "fewer than 50 lines");
  if (o.pass) o.detail = std::to_string(lines) + " lines round-trip byte-exact";
  return o;
}

// Proposes one token-changing edit per attempt, then gives up.
class AdversarialBackend : public AgentBackend {
 public:
  ToolCall Next(const TurnRequest& request) override {
    ToolCall call;
    if (request.last_tool == ToolName::kEditFile) return call;
    call.name = ToolName::kEditFile;
    call.args = {{"path", request.path},
                 {"content", request.content + "\nvoid 0;\n"}};
    return call;
  }
};

Outcome HookRejects() {
  Outcome o;
  Workspace ws("corpus_small");
  const auto before = testing::TreeContents(ws.dir.path());
  RunPlan plan;
  plan.backend = [](const std::string&) {
    return std::make_unique<AdversarialBackend>();
  };
  plan.backend_label = "adversarial";
  EventLog log;
  const RunState s = ExecuteRun(plan, ws.dir.path(), log);
  const auto after = testing::TreeContents(ws.dir.path());
  size_t changed_tokens = 0;
  for (const auto& [path, content] : before) {
    if (!path.ends_with(".js")) continue;
    const auto it = after.find(path);
    if (it == after.end()) continue;
    const TokenDiff diff =
        DiffTokens(ComputeFingerprint(content), ComputeFingerprint(it->second));
    for (const TokenEdit& e : diff.edits) {
      changed_tokens += std::max(e.removed.size(), e.added.size());
    }
  }
  int attempts = 0;
  for (const Json& e : EventsOf(log, "session_finished")) {
    attempts += e["attempts_used"].get<int>();
  }
  int rejections = 0, other = 0;
  for (const Json& e : EventsOf(log, "hook_verdict")) {
    if (e["reason"] == "behavior_change" && e["accepted"] == false) {
      ++rejections;
    } else {
      ++other;
    }
  }
  o.Require(s.suppressions.empty(), "suppressions were added");
  o.Require(changed_tokens == 0, std::to_string(changed_tokens) + " tokens changed");
  o.Require(attempts > 0, "no attempts");
  o.Require(rejections == attempts, std::to_string(rejections) + " rejections for " +
                                        std::to_string(attempts) + " attempts");
  o.Require(other == 0, "unexpected verdicts");
  if (o.pass) {
    o.detail = "0 tokens changed, " + std::to_string(rejections) +
               " behavior_change verdicts for " + std::to_string(attempts) +
               " attempts";
  }
  return o;
}

Outcome AdditionalAccounting() {
  Outcome o;
  const fs::path fixtures = testing::FixtureDir();
  const Json expected = testing::ReadJson(fixtures / "oversuppress.expected.json");
  Workspace ws("oversuppress");
  RunPlan plan;
  plan.policy = LoadClassificationMap(fixtures / "oversuppress.map.json");
  EventLog log;
  const RunState s = ExecuteRun(plan, ws.dir.path(), log);
  const RunReport r = BuildReport(
      log.events(), LoadManifest(fixtures / "oversuppress.baseline.json"), Price{});
  o.Require(s.exit_code == kExitClean, "exit " + std::to_string(s.exit_code));
  o.Require(r.suppressions_total == expected["suppressions"].get<int64_t>(),
            "suppressions " + std::to_string(r.suppressions_total));
  o.Require(r.necessary == expected["necessary"].get<int64_t>(), "necessary");
  o.Require(r.additional == expected["additional"].get<int64_t>(),
            "additional " + (r.additional ? std::to_string(*r.additional) : "n/a"));
  o.Require(r.suppressions_bug == expected["bug"].get<int64_t>(), "bug count");
  o.Require(r.suppressions_valid == expected["valid"].get<int64_t>(), "valid count");
  if (o.pass) {
    o.detail = "necessary " + std::to_string(*r.necessary) + ", additional " +
               FormatAdditional(*r.necessary, *r.additional);
  }
  return o;
}

Outcome Guard(const std::function<Outcome()>& criterion) {
  try {
    return criterion();
  } catch (const std::exception& e) {
    return Outcome{false, std::string("exception: ") + e.what()};
  }
}

}  // namespace
}  // namespace agentic_typer

int main() {
  using agentic_typer::Outcome;
  namespace at = agentic_typer;
  if (!at::testing::CheckerAvailable()) {
    std::printf("FAIL acceptance: no type checker found\n");
    return 1;
  }
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"table arithmetic", at::TableArithmetic},
      {"zero-error corpus runs", at::ZeroErrorRuns},
      {"behavior preservation", at::BehaviorPreserved},
      {"fingerprint properties", at::FingerprintProperties},
      {"parallel determinism", at::ParallelDeterminism},
      {"cross-file cascade", at::CascadeConverges},
      {"checker output golden", at::GoldenRoundTrip},
      {"hook rejection", at::HookRejects},
      {"additional suppressions", at::AdditionalAccounting},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [label, criterion] : criteria) {
    const Outcome o = at::Guard(criterion);
    ++n;
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", n, label,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
