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

#include "agentic_typer/orchestrator.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "agentic_typer/text.h"

namespace agentic_typer {

std::vector<WorkOrder> PartitionWork(const ErrorSnapshot& snapshot,
                                     int max_turns, int max_attempts) {
  std::vector<WorkOrder> orders;
  for (const auto& [path, diags] : snapshot.by_file) {
    if (diags.empty()) continue;
    WorkOrder o;
    o.path = path;
    o.diagnostics = diags;
    o.max_turns = max_turns;
    o.max_attempts = max_attempts;
    orders.push_back(std::move(o));
  }
  std::stable_sort(orders.begin(), orders.end(),
                   [](const WorkOrder& a, const WorkOrder& b) {
                     if (a.diagnostics.size() != b.diagnostics.size()) {
                       return a.diagnostics.size() > b.diagnostics.size();
                     }
                     return a.path < b.path;
                   });
  return orders;
}

ErrorSnapshot DispatchableErrors(const ErrorSnapshot& snapshot,
                                 const SourceSet& sources,
                                 const std::set<std::string>& missing_codes) {
  std::vector<Diagnostic> keep;
  for (const Diagnostic& d : snapshot.errors()) {
    if (!sources.Find(d.path)) continue;
    if (d.code == kUnusedDirectiveCode) continue;
    if (MissingModuleName(d, missing_codes)) continue;
    keep.push_back(d);
  }
  ErrorSnapshot out = MakeSnapshot(std::move(keep));
  out.taken_at = snapshot.taken_at;
  return out;
}

Json SnapshotToJson(const ErrorSnapshot& snapshot) {
  Json j = Json::object();
  j["total"] = snapshot.total;
  j["files"] = snapshot.by_file.size();
  Json diags = Json::array();
  for (const Diagnostic& d : snapshot.errors()) {
    diags.push_back(DiagnosticToJson(d));
  }
  j["diagnostics"] = std::move(diags);
  j["warnings"] = snapshot.warnings.size();
  j["notes"] = snapshot.notes;
  return j;
}

namespace {

size_t CountCode(const ErrorSnapshot& snapshot, std::string_view code) {
  size_t n = 0;
  for (const auto& [path, diags] : snapshot.by_file) {
    for (const Diagnostic& d : diags) n += d.code == code;
  }
  return n;
}

bool SameKey(const Suppression& a, const Suppression& b) {
  return a.path == b.path && a.explanation == b.explanation &&
         a.category == b.category &&
         a.anchor_content_hash == b.anchor_content_hash;
}

class Run {
 public:
  Run(const RunPlan& plan, const std::filesystem::path& root, EventLog& log)
      : plan_(plan), root_(root), log_(log) {
    backend_ = plan.backend ? plan.backend
                            : MakeScriptedBackendFactory(plan.policy);
  }

  RunState Execute();

 private:
  bool Cancelled() const { return plan_.cancel && plan_.cancel->load(); }
  void Snapshot(const std::string& label, const ErrorSnapshot& s);
  SessionOutcome Dispatch(const WorkOrder& order, int round, size_t index,
                          int worker);
  void RunPool(const std::vector<WorkOrder>& orders);
  void Finish();

  const RunPlan& plan_;
  std::filesystem::path root_;
  EventLog& log_;
  BackendFactory backend_;
  RunState state_;
  std::map<std::string, Fingerprint> baselines_;
  std::unique_ptr<Checker> checker_;

  std::mutex owned_mu_;
  std::set<std::string> owned_;
};

void Run::Snapshot(const std::string& label, const ErrorSnapshot& s) {
  Json payload = {{"label", label}};
  Json snapshot = SnapshotToJson(s);
  for (auto& [k, v] : snapshot.items()) payload[k] = v;
  log_.Append("snapshot", std::move(payload));
}

SessionOutcome Run::Dispatch(const WorkOrder& order, int round, size_t index,
                             int worker) {
  const std::string session =
      "r" + std::to_string(round) + "-" + std::to_string(index);
  {
    std::lock_guard<std::mutex> lock(owned_mu_);
    if (!owned_.insert(order.path).second) {
      throw std::logic_error("two sessions claimed " + order.path);
    }
    log_.Append("session_started", {{"session", session},
                                    {"path", order.path},
                                    {"round", round},
                                    {"worker", worker},
                                    {"errors", order.diagnostics.size()}});
  }
  SessionOutcome outcome;
  outcome.session = session;
  outcome.path = order.path;
  outcome.round = round;
  outcome.remaining = order.diagnostics;
  auto release = [&] {
    std::lock_guard<std::mutex> lock(owned_mu_);
    log_.Append("session_finished", SessionOutcomeToJson(outcome));
    owned_.erase(order.path);
  };
  try {
    std::unique_ptr<AgentBackend> backend;
    try {
      backend = backend_(session);
    } catch (const std::exception& e) {
      outcome.status = SessionStatus::kBackendFailure;
      outcome.failure = e.what();
    }
    if (backend) {
      SessionContext ctx;
      ctx.root = root_;
      ctx.session = session;
      ctx.round = round;
      ctx.baseline = &baselines_.at(order.path);
      ctx.hook_mode = plan_.hook_mode;
      ctx.checker = checker_.get();
      ctx.log = &log_;
      ctx.cancel = plan_.cancel;
      outcome = RunSession(order, *backend, ctx);
    }
  } catch (...) {
    outcome.failure = "aborted";
    release();
    throw;
  }
  release();
  return outcome;
}

void Run::RunPool(const std::vector<WorkOrder>& orders) {
  std::vector<SessionOutcome> results(orders.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> abort{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&](int worker) {
    while (!abort.load() && !Cancelled()) {
      const size_t i = next.fetch_add(1);
      if (i >= orders.size()) return;
      try {
        results[i] = Dispatch(orders[i], 0, i, worker);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        abort = true;
        return;
      }
    }
  };
  const int k = std::max(
      1, std::min(plan_.parallelism, static_cast<int>(orders.size())));
  std::vector<std::thread> workers;
  for (int w = 1; w < k; ++w) workers.emplace_back(work, w);
  work(0);
  for (std::thread& t : workers) t.join();
  for (size_t i = 0; i < orders.size() && i < next.load(); ++i) {
    if (!results[i].session.empty()) state_.outcomes.push_back(results[i]);
  }
  if (error) std::rethrow_exception(error);
}

RunState Run::Execute() {
  log_.Append("run_started", {{"repo", plan_.repo_label},
                              {"root", root_.string()},
                              {"phase", PhaseName(plan_.phase)},
                              {"parallelism", plan_.parallelism},
                              {"verification_rounds", plan_.verification_rounds},
                              {"hook_mode", HookModeName(plan_.hook_mode)},
                              {"backend", plan_.backend_label}});
  if (plan_.phase != Phase::kMinimalSetup) {
    log_.Append("not_implemented",
                {{"phase", PhaseName(plan_.phase)},
                 {"message", "only the minimal phase runs agents"}});
    state_.fatal_error = "phase " + std::string(PhaseName(plan_.phase)) +
                         ": agent runs are only implemented for the minimal phase";
    Finish();
    return std::move(state_);
  }
  try {
    const auto config = ReadCheckerConfig(root_);
    if (!config) {
      throw ConfigError("no " + std::string(kCheckerConfigFile) + " in " +
                        root_.string() + "; run init first");
    }
    state_.sources = DiscoverSources(root_, *config);
    Json skipped = Json::array();
    for (const SkippedFile& s : state_.sources.skipped) {
      skipped.push_back({{"path", s.path}, {"reason", s.reason}});
    }
    log_.Append("workspace", {{"files", state_.sources.files.size()},
                              {"loc", state_.sources.TotalLoc()},
                              {"skipped", std::move(skipped)}});
    for (const FileRecord& f : state_.sources.files) {
      baselines_.emplace(f.path, f.baseline_fingerprint);
    }

    checker_ = std::make_unique<Checker>(root_, plan_.checker);
    state_.initial = checker_->Check();
    Snapshot("initial", state_.initial);

    state_.missing_types = ResolveMissingTypes(state_.initial.errors(),
                                               plan_.missing_declaration_codes);
    std::vector<std::string> recorded;
    if (plan_.record_types_packages && !state_.missing_types.packages.empty()) {
      recorded = RecordTypesPackages(root_, state_.missing_types.packages);
    }
    Json packages = Json::array();
    for (const TypesPackage& p : state_.missing_types.packages) {
      packages.push_back({{"module", p.module}, {"package", p.package}});
    }
    log_.Append("missing_types", {{"packages", std::move(packages)},
                                  {"recorded", recorded},
                                  {"warnings", state_.missing_types.warnings}});

    const auto orders =
        PartitionWork(DispatchableErrors(state_.initial, state_.sources,
                                         plan_.missing_declaration_codes),
                      plan_.max_turns, plan_.max_attempts);
    Json order_paths = Json::array();
    for (const WorkOrder& o : orders) order_paths.push_back(o.path);
    log_.Append("dispatch", {{"round", 0}, {"order", std::move(order_paths)}});
    RunPool(orders);

    ErrorSnapshot current = checker_->Check();
    Snapshot("after_sessions", current);
    for (int round = 1; round <= plan_.verification_rounds && !Cancelled();
         ++round) {
      const auto pending =
          PartitionWork(DispatchableErrors(current, state_.sources,
                                           plan_.missing_declaration_codes),
                        plan_.max_turns, plan_.max_attempts);
      if (pending.empty()) break;
      state_.rounds_used = round;
      Json files = Json::array();
      for (const WorkOrder& o : pending) files.push_back(o.path);
      log_.Append("verification_round",
                  {{"round", round}, {"files", std::move(files)}});
      for (size_t i = 0; i < pending.size() && !Cancelled(); ++i) {
        state_.outcomes.push_back(Dispatch(pending[i], round, i, 0));
      }
      current = checker_->Check();
      Snapshot("round_" + std::to_string(round), current);
    }

    if (!Cancelled()) {
      state_.cleaned_up = CleanupUnused(root_, current);
      Json removed = Json::array();
      for (const RemovedDirective& r : state_.cleaned_up) {
        removed.push_back({{"path", r.path}, {"line", r.line}, {"text", r.text}});
      }
      log_.Append("cleanup", {{"removed", std::move(removed)}});
      if (!state_.cleaned_up.empty()) current = checker_->Check();
    }
    state_.final = current;
    Snapshot("final", state_.final);
    state_.complete = !Cancelled();
    if (Cancelled()) log_.Append("interrupted");
  } catch (const std::exception& e) {
    state_.fatal_error = e.what();
    Json payload = {{"error", e.what()}};
    if (const auto* crash = dynamic_cast<const CheckerCrash*>(&e)) {
      payload["output"] = crash->output();
    }
    log_.Append("fatal", std::move(payload));
  }
  Finish();
  return std::move(state_);
}

void Run::Finish() {
  if (state_.fatal_error.empty()) {
    // Directives this run added that survived to the end.
    std::vector<Suppression> records;
    for (const SessionOutcome& o : state_.outcomes) {
      for (const Suppression& r : o.suppressions_removed) {
        auto it = std::find_if(records.begin(), records.end(),
                               [&](const Suppression& s) { return SameKey(s, r); });
        if (it != records.end()) records.erase(it);
      }
      records.insert(records.end(), o.suppressions_added.begin(),
                     o.suppressions_added.end());
    }
    std::vector<std::string> paths;
    for (const FileRecord& f : state_.sources.files) paths.push_back(f.path);
    const SuppressionScan scan = ScanSuppressions(root_, paths);
    for (const Suppression& found : scan.tagged) {
      auto it = std::find_if(records.begin(), records.end(),
                             [&](const Suppression& s) { return SameKey(s, found); });
      if (it == records.end()) continue;  // predates the run
      Suppression s = std::move(*it);
      records.erase(it);
      s.anchor_line = found.anchor_line;
      state_.suppressions.push_back(std::move(s));
    }
    std::sort(state_.suppressions.begin(), state_.suppressions.end(),
              [](const Suppression& a, const Suppression& b) {
                return std::tie(a.path, a.anchor_line) <
                       std::tie(b.path, b.anchor_line);
              });
    state_.foreign_directives = scan.foreign;
    state_.unresolved = state_.final.errors();
    Json entries = Json::array();
    for (const Suppression& s : state_.suppressions) {
      entries.push_back(SuppressionToJson(s));
    }
    Json foreign = Json::array();
    for (const ForeignDirective& f : scan.foreign) {
      foreign.push_back({{"path", f.path}, {"line", f.line}, {"text", f.text}});
    }
    log_.Append("suppressions",
                {{"entries", std::move(entries)}, {"foreign", std::move(foreign)}});
    state_.exit_code = state_.final.total == 0 && state_.complete
                           ? kExitClean
                           : kExitUnresolved;
  } else {
    state_.exit_code = kExitFatal;
  }
  log_.Append("run_finished",
              {{"exit_code", state_.exit_code},
               {"complete", state_.complete},
               {"unresolved", state_.unresolved.size()},
               {"unused_directives",
                CountCode(state_.final, kUnusedDirectiveCode)},
               {"rounds_used", state_.rounds_used},
               {"sessions", state_.outcomes.size()}});
}

}  // namespace

RunState ExecuteRun(const RunPlan& plan, const std::filesystem::path& root,
                    EventLog& log) {
  Run run(plan, root, log);
  return run.Execute();
}

}  // namespace agentic_typer
