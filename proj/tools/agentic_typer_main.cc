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

// agentic-typer: adds type checking to a JavaScript repository without
// changing its behavior.
//
//   agentic-typer init   [--root DIR] [--phase minimal]
//   agentic-typer run    [--root DIR] [--parallelism 10] [--backend scripted]
//   agentic-typer diff   A.js B.js
//   agentic-typer report EVENTS.jsonl [--baseline FILE]

#include <csignal>
#include <iostream>

#include "CLI11.hpp"
#include "agentic_typer/cli.h"
#include "agentic_typer/orchestrator.h"

namespace {

std::atomic<bool> interrupted{false};

void OnInterrupt(int) { interrupted.store(true); }

}  // namespace

int main(int argc, char** argv) {
  using agentic_typer::Json;
  CLI::App app{"Type-check a JavaScript repository through annotation-only edits"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string root, phase, backend, hook_mode, baseline, classification_map,
      price_in, price_out, json_out, log_out, checker, repo;
  int parallelism = 0, rounds = 0;
  bool dry_run = false, overwrite = false;
  std::vector<CLI::Option*> options = {
      app.add_option("--root", root, "Repository root (default: .)"),
      app.add_option("--phase", phase, "minimal, full or strict"),
      app.add_option("--parallelism", parallelism, "Concurrent sessions"),
      app.add_option("--backend", backend,
                     "scripted, or external:<command> speaking the line protocol"),
      app.add_option("--hook-mode", hook_mode, "reject or alert"),
      app.add_option("--rounds", rounds, "Verification rounds"),
      app.add_option("--baseline", baseline,
                     "Suppression manifest of necessary suppressions"),
      app.add_option("--classification-map", classification_map,
                     "Code-to-category map for the scripted backend"),
      app.add_option("--price-in", price_in, "Dollars per million input tokens"),
      app.add_option("--price-out", price_out,
                     "Dollars per million output tokens"),
      app.add_flag("--dry-run", dry_run, "Print intended edits, change nothing"),
      app.add_flag("--overwrite-config", overwrite,
                   "Replace an existing stricter checker configuration"),
      app.add_option("--json-out", json_out, "Where to write the JSON report"),
      app.add_option("--log-out", log_out, "Where to write the event log"),
      app.add_option("--checker", checker, "Type checker executable"),
      app.add_option("--repo", repo, "Repository label in reports"),
  };
  const std::vector<std::string> keys = {
      "root",     "phase",   "parallelism",        "backend",
      "hook_mode", "rounds", "baseline",           "classification_map",
      "price_in", "price_out", "dry_run",          "overwrite_config",
      "json_out", "log_out", "checker",            "repo"};

  auto* init = app.add_subcommand("init", "Write the checker configuration and "
                                          "report the initial errors");
  auto* run = app.add_subcommand("run", "Run the migration");
  auto* diff = app.add_subcommand("diff", "Compare two files token by token");
  std::string file_a, file_b;
  diff->add_option("a", file_a)->required();
  diff->add_option("b", file_b)->required();
  auto* report = app.add_subcommand("report", "Rebuild a report from an event log");
  std::string event_log;
  report->add_option("events", event_log)->required();

  CLI11_PARSE(app, argc, argv);

  if (diff->parsed()) {
    return agentic_typer::CmdDiff(file_a, file_b, std::cout, std::cerr);
  }

  Json flags = Json::object();
  for (size_t i = 0; i < options.size(); ++i) {
    if (options[i]->count() == 0) continue;
    const std::string& key = keys[i];
    if (key == "parallelism") {
      flags[key] = parallelism;
    } else if (key == "rounds") {
      flags[key] = rounds;
    } else if (key == "dry_run") {
      flags[key] = dry_run;
    } else if (key == "overwrite_config") {
      flags[key] = overwrite;
    } else {
      flags[key] = options[i]->as<std::string>();
    }
  }

  agentic_typer::CliConfig config;
  try {
    const std::string where = flags.value("root", std::string("."));
    const Json file = report->parsed() ? Json::object()
                                       : agentic_typer::ReadProjectConfig(where);
    config = agentic_typer::ResolveCliConfig(file, flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return agentic_typer::kExitFatal;
  }

  if (init->parsed()) return agentic_typer::CmdInit(config, std::cout, std::cerr);
  if (report->parsed()) {
    return agentic_typer::CmdReport(event_log, config, std::cout, std::cerr);
  }
  std::signal(SIGINT, OnInterrupt);
  std::signal(SIGTERM, OnInterrupt);
  return agentic_typer::CmdRun(config, std::cout, std::cerr, &interrupted);
}
