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

#include "agentic_typer/cli.h"

#include <unistd.h>

#include <cstdlib>
#include <map>
#include <set>

#include "agentic_typer/orchestrator.h"
#include "agentic_typer/sequence_diff.h"
#include "agentic_typer/text.h"

namespace agentic_typer {

namespace fs = std::filesystem;

std::optional<std::string> CliConfig::external_command() const {
  constexpr std::string_view kPrefix = "external:";
  if (!std::string_view(backend).starts_with(kPrefix)) return std::nullopt;
  return backend.substr(kPrefix.size());
}

namespace {

const std::set<std::string>& KnownKeys() {
  static const std::set<std::string> keys = {
      "root",     "repo",       "phase",      "parallelism",
      "backend",  "hook_mode",  "rounds",     "classification_map",
      "baseline", "price_in",   "price_out",  "dry_run",
      "overwrite_config",       "checker",    "json_out",
      "log_out"};
  return keys;
}

const std::set<std::string>& PathKeys() {
  static const std::set<std::string> keys = {
      "classification_map", "baseline", "checker", "json_out", "log_out"};
  return keys;
}

std::string String(const Json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError(key + " must be a string");
  return v.get<std::string>();
}

int Integer(const Json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ConfigError(key + " must be an integer");
  return v.get<int>();
}

bool Boolean(const Json& v, const std::string& key) {
  if (!v.is_boolean()) throw ConfigError(key + " must be true or false");
  return v.get<bool>();
}

int64_t Usd(const Json& v, const std::string& key) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number()) {
    text = v.dump();
  } else {
    throw ConfigError(key + " must be a price in dollars");
  }
  const auto parsed = ParseUsd(text);
  if (!parsed) throw ConfigError(key + ": not a price: " + text);
  return *parsed;
}

}  // namespace

CliConfig ResolveCliConfig(const Json& file, const Json& flags) {
  CliConfig c;
  for (const Json* layer : {&file, &flags}) {
    if (!layer->is_object()) throw ConfigError("configuration must be an object");
    for (const auto& [key, value] : layer->items()) {
      if (!KnownKeys().count(key)) throw ConfigError("unknown setting " + key);
      if (layer == &file && key == "root") {
        throw ConfigError("root cannot be set in " +
                          std::string(kProjectConfigFile));
      }
    }
  }
  if (flags.contains("root")) c.root = String(flags["root"], "root");

  Json merged = file;
  for (auto& [key, value] : merged.items()) {
    if (PathKeys().count(key) && value.is_string()) {
      const fs::path p(value.get<std::string>());
      if (p.is_relative()) value = (c.root / p).lexically_normal().string();
    }
  }
  for (const auto& [key, value] : flags.items()) merged[key] = value;

  for (const auto& [key, v] : merged.items()) {
    if (key == "root") continue;
    if (key == "repo") {
      c.repo_label = String(v, key);
    } else if (key == "phase") {
      const auto p = ParsePhase(String(v, key));
      if (!p) throw ConfigError("phase must be minimal, full or strict");
      c.phase = *p;
    } else if (key == "parallelism") {
      c.parallelism = Integer(v, key);
    } else if (key == "backend") {
      c.backend = String(v, key);
    } else if (key == "hook_mode") {
      const auto m = ParseHookMode(String(v, key));
      if (!m) throw ConfigError("hook_mode must be reject or alert");
      c.hook_mode = *m;
    } else if (key == "rounds") {
      c.rounds = Integer(v, key);
    } else if (key == "classification_map") {
      c.classification_map = String(v, key);
    } else if (key == "baseline") {
      c.baseline = String(v, key);
    } else if (key == "price_in") {
      c.price.in = Usd(v, key);
    } else if (key == "price_out") {
      c.price.out = Usd(v, key);
    } else if (key == "dry_run") {
      c.dry_run = Boolean(v, key);
    } else if (key == "overwrite_config") {
      c.overwrite_config = Boolean(v, key);
    } else if (key == "checker") {
      c.checker = String(v, key);
    } else if (key == "json_out") {
      c.json_out = String(v, key);
    } else if (key == "log_out") {
      c.log_out = String(v, key);
    }
  }
  if (c.parallelism < 1) throw ConfigError("parallelism must be at least 1");
  if (c.rounds < 0) throw ConfigError("rounds must not be negative");
  if (c.backend != "scripted") {
    const auto cmd = c.external_command();
    if (!cmd) {
      throw ConfigError("backend must be scripted or external:<command>");
    }
    if (TrimWhitespace(*cmd).empty()) {
      throw ConfigError("external backend needs a command");
    }
  }
  if (c.repo_label.empty()) {
    const fs::path abs = fs::absolute(c.root).lexically_normal();
    c.repo_label = abs.has_filename() ? abs.filename().string()
                                      : abs.parent_path().filename().string();
  }
  return c;
}

Json ReadProjectConfig(const fs::path& root) {
  const fs::path file = root / kProjectConfigFile;
  if (!fs::exists(file)) return Json::object();
  Json j;
  try {
    j = Json::parse(ReadFileOrThrow(file), nullptr, true, true);
  } catch (const std::exception& e) {
    throw ConfigError(file.string() + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError(file.string() + ": expected an object");
  return j;
}

namespace {

constexpr std::string_view kInstallHint =
    "install TypeScript (npm install --save-dev typescript) or pass --checker";

// A throwaway copy of a repository for dry runs. Dependencies are linked,
// not copied; version-control metadata is left out.
class ScratchCopy {
 public:
  explicit ScratchCopy(const fs::path& source) {
    std::string tmpl = (fs::temp_directory_path() / "agentic-typer-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw std::runtime_error("cannot create scratch dir");
    dir_ = tmpl;
    for (const auto& entry : fs::directory_iterator(source)) {
      const std::string name = entry.path().filename().string();
      if (name == ".git" || name == kOutputDir) continue;
      if (name == "node_modules") {
        fs::create_directory_symlink(fs::absolute(entry.path()), dir_ / name);
        continue;
      }
      fs::copy(entry.path(), dir_ / name,
               fs::copy_options::recursive | fs::copy_options::copy_symlinks);
    }
  }
  ~ScratchCopy() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  const fs::path& dir() const { return dir_; }

 private:
  fs::path dir_;
};

void PrintLineDiff(const std::string& path, std::string_view before,
                   std::string_view after, std::ostream& out) {
  const auto a = SplitLines(before), b = SplitLines(after);
  out << "--- " << path << "\n+++ " << path << "\n";
  for (const DiffOp& op : SequenceDiff<std::string_view>(a, b)) {
    if (op.kind == DiffOpKind::kDelete) {
      out << "@@ line " << op.a_begin + 1 << " @@\n";
      for (size_t i = op.a_begin; i < op.a_end; ++i) out << "-" << a[i] << "\n";
    } else if (op.kind == DiffOpKind::kInsert) {
      out << "@@ line " << op.a_begin + 1 << " @@\n";
      for (size_t i = op.b_begin; i < op.b_end; ++i) out << "+" << b[i] << "\n";
    }
  }
}

// Prints what a dry run in `scratch` would have changed in `root`.
void PrintIntendedEdits(const fs::path& root, const fs::path& scratch,
                        std::ostream& out) {
  std::vector<std::string> changed;
  for (auto it = fs::recursive_directory_iterator(scratch);
       it != fs::recursive_directory_iterator(); ++it) {
    const std::string name = it->path().filename().string();
    if (it->is_symlink() || name == kOutputDir) {
      if (it->is_directory()) it.disable_recursion_pending();
      continue;
    }
    if (!it->is_regular_file()) continue;
    const std::string rel = RelativePath(scratch, it->path());
    const std::string after = ReadFileOrThrow(it->path());
    std::string before;
    if (fs::exists(root / rel)) before = ReadFileOrThrow(root / rel);
    if (before != after) changed.push_back(rel);
  }
  std::sort(changed.begin(), changed.end());
  if (changed.empty()) {
    out << "dry run: no files would change\n";
    return;
  }
  out << "dry run: " << changed.size() << " file(s) would change\n";
  for (const std::string& rel : changed) {
    std::string before;
    if (fs::exists(root / rel)) before = ReadFileOrThrow(root / rel);
    PrintLineDiff(rel, before, ReadFileOrThrow(scratch / rel), out);
  }
}

void PrintMissingTypes(const MissingTypes& missing, std::ostream& out) {
  if (missing.packages.empty()) return;
  out << "missing type declarations:\n";
  std::string install = "npm install --save-dev";
  for (const TypesPackage& p : missing.packages) {
    out << "  " << p.module << " -> " << p.package << "\n";
    install += " " + p.package;
  }
  out << "install with: " << install << "\n";
  for (const std::string& w : missing.warnings) out << "warning: " << w << "\n";
}

CheckerOptions CheckerOptionsFor(const CliConfig& config) {
  CheckerOptions o;
  if (config.checker) o.explicit_binary = fs::absolute(*config.checker);
  return o;
}

int InitIn(const CliConfig& config, const fs::path& root, std::ostream& out) {
  ScaffoldOptions options;
  options.overwrite = config.overwrite_config;
  const ScaffoldResult scaffold = ScaffoldConfig(config.phase, root, options);
  out << (scaffold.changed ? "wrote " : "unchanged ") << kCheckerConfigFile
      << " (" << PhaseName(config.phase) << " phase)\n";
  Checker checker(root, CheckerOptionsFor(config));
  const ErrorSnapshot snapshot = checker.Check();
  out << snapshot.total << (snapshot.total == 1 ? " error" : " errors")
      << " in " << snapshot.by_file.size()
      << (snapshot.by_file.size() == 1 ? " file" : " files") << "\n";
  for (const std::string& note : snapshot.notes) out << note << "\n";
  PrintMissingTypes(ResolveMissingTypes(snapshot.errors()), out);
  return 0;
}

}  // namespace

int CmdInit(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!fs::is_directory(config.root)) {
      throw ConfigError(config.root.string() + " is not a directory");
    }
    if (config.dry_run) {
      ScratchCopy scratch(config.root);
      const int code = InitIn(config, scratch.dir(), out);
      PrintIntendedEdits(config.root, scratch.dir(), out);
      return code;
    }
    return InitIn(config, config.root, out);
  } catch (const CheckerEnvironmentError& e) {
    err << "error: " << e.what() << "\n" << kInstallHint << "\n";
  } catch (const CheckerCrash& e) {
    err << "error: " << e.what() << "\n" << e.output();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitFatal;
}

namespace {

RunPlan PlanFor(const CliConfig& config, const fs::path& root,
                const std::atomic<bool>* cancel) {
  RunPlan plan;
  plan.phase = config.phase;
  plan.repo_label = config.repo_label;
  plan.parallelism = config.parallelism;
  plan.verification_rounds = config.rounds;
  plan.hook_mode = config.hook_mode;
  plan.checker = CheckerOptionsFor(config);
  plan.cancel = cancel;
  if (config.classification_map) {
    plan.policy = LoadClassificationMap(*config.classification_map);
  }
  if (const auto cmd = config.external_command()) {
    plan.backend = MakeExternalBackendFactory(*cmd, fs::absolute(root));
    plan.backend_label = "external";
  }
  return plan;
}

void PrintUnresolved(const RunState& state, std::ostream& out) {
  if (state.unresolved.empty()) return;
  out << "\nunresolved errors (" << state.unresolved.size() << "):\n";
  for (const Diagnostic& d : state.unresolved) {
    out << "  " << d.path << ":" << d.line << ":" << d.column << " " << d.code
        << " " << d.message.substr(0, d.message.find('\n')) << "\n";
  }
}

int RunIn(const CliConfig& config, const fs::path& root, bool outputs_in_root,
          std::ostream& out, std::ostream& err,
          const std::atomic<bool>* cancel) {
  ScaffoldOptions options;
  options.overwrite = config.overwrite_config;
  ScaffoldConfig(config.phase, root, options);
  const fs::path out_dir = root / kOutputDir;
  const fs::path log_path =
      config.log_out && outputs_in_root ? *config.log_out : out_dir / "events.jsonl";
  const fs::path json_path =
      config.json_out ? *config.json_out : out_dir / "report.json";
  std::optional<std::vector<ManifestEntry>> baseline;
  if (config.baseline) baseline = LoadManifest(*config.baseline);

  const RunPlan plan = PlanFor(config, root, cancel);
  EventLog log(log_path);
  const RunState state = ExecuteRun(plan, root, log);
  if (!state.fatal_error.empty()) err << "error: " << state.fatal_error << "\n";

  fs::create_directories(out_dir);
  WriteFileAtomic(out_dir / "suppressions.json",
                  SuppressionManifest(state.suppressions).dump(2) + "\n");
  const RunReport report = BuildReport(log.events(), baseline, config.price);
  out << RenderTable({report});
  PrintMissingTypes(state.missing_types, out);
  PrintUnresolved(state, out);
  if (json_path.has_parent_path()) fs::create_directories(json_path.parent_path());
  WriteFileAtomic(json_path, EmitJson(report).dump(2) + "\n");
  return state.exit_code;
}

}  // namespace

int CmdRun(const CliConfig& config, std::ostream& out, std::ostream& err,
           const std::atomic<bool>* cancel) {
  try {
    if (!fs::is_directory(config.root)) {
      throw ConfigError(config.root.string() + " is not a directory");
    }
    if (config.dry_run) {
      ScratchCopy scratch(config.root);
      CliConfig scratch_config = config;
      scratch_config.json_out.reset();
      const int code = RunIn(scratch_config, scratch.dir(), false, out, err, cancel);
      PrintIntendedEdits(config.root, scratch.dir(), out);
      return code;
    }
    return RunIn(config, config.root, true, out, err, cancel);
  } catch (const CheckerEnvironmentError& e) {
    err << "error: " << e.what() << "\n" << kInstallHint << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitFatal;
}

int CmdDiff(const fs::path& a, const fs::path& b, std::ostream& out,
            std::ostream& err) {
  try {
    const Fingerprint fa = ComputeFingerprint(ReadFileOrThrow(a));
    const Fingerprint fb = ComputeFingerprint(ReadFileOrThrow(b));
    if (fa == fb) return 0;
    out << RenderTokenDiff(DiffTokens(fa, fb));
    return 1;
  } catch (const LexError& e) {
    err << "error: cannot tokenize: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

int CmdReport(const fs::path& event_log, const CliConfig& config,
              std::ostream& out, std::ostream& err) {
  try {
    const std::vector<Json> events = ReadEventLog(event_log);
    std::optional<std::vector<ManifestEntry>> baseline;
    if (config.baseline) baseline = LoadManifest(*config.baseline);
    const RunReport report = BuildReport(events, baseline, config.price);
    out << RenderTable({report});
    if (config.json_out) {
      WriteFileAtomic(*config.json_out, EmitJson(report).dump(2) + "\n");
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitFatal;
}

}  // namespace agentic_typer
