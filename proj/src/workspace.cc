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

#include "agentic_typer/workspace.h"

#include <algorithm>
#include <array>
#include <system_error>

#include "agentic_typer/glob.h"
#include "agentic_typer/text.h"
#include "json.hpp"

namespace agentic_typer {

using ordered_json = nlohmann::ordered_json;

std::string_view PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kMinimalSetup:
      return "minimal";
    case Phase::kFullCoverage:
      return "full";
    case Phase::kStrictMode:
      return "strict";
  }
  return "minimal";
}

std::optional<Phase> ParsePhase(std::string_view name) {
  if (name == "minimal" || name == "1") return Phase::kMinimalSetup;
  if (name == "full" || name == "2") return Phase::kFullCoverage;
  if (name == "strict" || name == "3") return Phase::kStrictMode;
  return std::nullopt;
}

Phase NextPhase(Phase phase) {
  switch (phase) {
    case Phase::kMinimalSetup:
      return Phase::kFullCoverage;
    case Phase::kFullCoverage:
      return Phase::kStrictMode;
    case Phase::kStrictMode:
      break;
  }
  throw std::out_of_range("strict mode is the last phase");
}

std::vector<std::string> DefaultIncludeGlobs() { return {"**/*.js"}; }

std::vector<std::string> DefaultExcludeGlobs() {
  return {"**/node_modules/**", "**/bower_components/**", "**/dist/**",
          "**/build/**", "**/coverage/**", "**/.*/**"};
}

CheckerConfig ConfigForPhase(Phase phase) {
  CheckerConfig c;
  c.include_globs = DefaultIncludeGlobs();
  c.exclude_globs = DefaultExcludeGlobs();
  c.no_implicit_any = phase >= Phase::kFullCoverage;
  c.strict = phase >= Phase::kStrictMode;
  return c;
}

std::optional<Phase> InferPhase(const CheckerConfig& c) {
  if (!c.allow_untyped_sources || !c.check_untyped_sources ||
      !c.suppress_emit) {
    return std::nullopt;
  }
  if (c.strict) return Phase::kStrictMode;
  if (c.no_implicit_any) return Phase::kFullCoverage;
  return Phase::kMinimalSetup;
}

namespace {

constexpr std::array<std::string_view, 5> kManagedOptions = {
    "allowJs", "checkJs", "noEmit", "noImplicitAny", "strict"};

ordered_json ParseJsonc(std::string_view text, const std::string& what) {
  try {
    return ordered_json::parse(text, nullptr, /*allow_exceptions=*/true,
                               /*ignore_comments=*/true);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("cannot parse " + what + ": " + e.what());
  }
}

std::vector<std::string> StringList(const ordered_json& j) {
  std::vector<std::string> out;
  if (!j.is_array()) return out;
  for (const auto& v : j) {
    if (v.is_string()) out.push_back(v.get<std::string>());
  }
  return out;
}

bool FlagOr(const ordered_json& opts, const char* key, bool fallback) {
  const auto it = opts.find(key);
  if (it == opts.end() || !it->is_boolean()) return fallback;
  return it->get<bool>();
}

CheckerConfig ConfigFromJson(const ordered_json& doc) {
  CheckerConfig c;
  const ordered_json opts = doc.value("compilerOptions", ordered_json::object());
  c.allow_untyped_sources = FlagOr(opts, "allowJs", false);
  c.check_untyped_sources = FlagOr(opts, "checkJs", false);
  c.suppress_emit = FlagOr(opts, "noEmit", false);
  c.strict = FlagOr(opts, "strict", false);
  // strict implies noImplicitAny unless it is switched off explicitly.
  c.no_implicit_any = FlagOr(opts, "noImplicitAny", c.strict);
  c.include_globs = doc.contains("include") ? StringList(doc["include"])
                                            : DefaultIncludeGlobs();
  c.exclude_globs = doc.contains("exclude") ? StringList(doc["exclude"])
                                            : DefaultExcludeGlobs();
  return c;
}

}  // namespace

std::optional<CheckerConfig> ReadCheckerConfig(
    const std::filesystem::path& root) {
  const auto path = root / kCheckerConfigFile;
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  std::string text;
  try {
    text = ReadFileOrThrow(path);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return ConfigFromJson(ParseJsonc(text, path.string()));
}

std::string RenderCheckerConfig(const CheckerConfig& config,
                                std::string_view preserve) {
  ordered_json existing = ordered_json::object();
  if (!preserve.empty()) {
    existing = ParseJsonc(preserve, std::string(kCheckerConfigFile));
    if (!existing.is_object()) existing = ordered_json::object();
  }
  ordered_json opts = ordered_json::object();
  opts["allowJs"] = config.allow_untyped_sources;
  opts["checkJs"] = config.check_untyped_sources;
  opts["noEmit"] = config.suppress_emit;
  opts["noImplicitAny"] = config.no_implicit_any;
  opts["strict"] = config.strict;
  if (existing.contains("compilerOptions") &&
      existing["compilerOptions"].is_object()) {
    std::vector<std::string> extra;
    for (const auto& [k, v] : existing["compilerOptions"].items()) {
      if (std::find(kManagedOptions.begin(), kManagedOptions.end(), k) ==
          kManagedOptions.end()) {
        extra.push_back(k);
      }
    }
    std::sort(extra.begin(), extra.end());
    for (const auto& k : extra) opts[k] = existing["compilerOptions"][k];
  }
  ordered_json doc = ordered_json::object();
  doc["compilerOptions"] = std::move(opts);
  doc["include"] = config.include_globs;
  doc["exclude"] = config.exclude_globs;
  std::vector<std::string> extra;
  for (const auto& [k, v] : existing.items()) {
    if (k != "compilerOptions" && k != "include" && k != "exclude") {
      extra.push_back(k);
    }
  }
  std::sort(extra.begin(), extra.end());
  for (const auto& k : extra) doc[k] = existing[k];
  return doc.dump(2) + "\n";
}

ScaffoldResult ScaffoldConfig(Phase phase, const std::filesystem::path& root,
                              const ScaffoldOptions& options) {
  std::error_code ec;
  if (!std::filesystem::is_directory(root, ec)) {
    throw ConfigError("repository root is not a directory: " + root.string());
  }
  const auto path = root / kCheckerConfigFile;
  std::string existing_text;
  std::optional<CheckerConfig> existing;
  if (std::filesystem::exists(path, ec)) {
    try {
      existing_text = ReadFileOrThrow(path);
      existing = ConfigFromJson(ParseJsonc(existing_text, path.string()));
    } catch (const ConfigError&) {
      if (!options.overwrite) throw;
      existing_text.clear();
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }

  CheckerConfig config = ConfigForPhase(phase);
  if (existing) {
    if (!options.overwrite) {
      if ((existing->no_implicit_any && !config.no_implicit_any) ||
          (existing->strict && !config.strict)) {
        throw ConfigError(
            std::string(kCheckerConfigFile) +
            " already enables stricter checking than phase '" +
            std::string(PhaseName(phase)) + "'; pass --overwrite to replace it");
      }
      const std::optional<Phase> current = InferPhase(*existing);
      const int from = current ? static_cast<int>(*current) : -1;
      if (static_cast<int>(phase) > from + 1) {
        throw ConfigError("phase '" + std::string(PhaseName(phase)) +
                          "' must follow the previous phase; pass --overwrite "
                          "to skip ahead");
      }
    }
    config.include_globs = existing->include_globs;
    config.exclude_globs = existing->exclude_globs;
  } else if (!options.overwrite && phase != Phase::kMinimalSetup) {
    throw ConfigError("phase '" + std::string(PhaseName(phase)) +
                      "' must follow the minimal phase; pass --overwrite to "
                      "skip ahead");
  }

  ScaffoldResult result;
  result.config = config;
  result.rendered = RenderCheckerConfig(config, existing_text);
  result.changed = result.rendered != existing_text;
  if (result.changed && !options.dry_run) {
    try {
      WriteFileAtomic(path, result.rendered);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }
  return result;
}

int CountLoc(std::string_view content) {
  int loc = 0;
  for (std::string_view line : SplitLines(content)) {
    if (!TrimWhitespace(line).empty()) ++loc;
  }
  return loc;
}

const FileRecord* SourceSet::Find(const std::string& path) const {
  const auto it = std::lower_bound(
      files.begin(), files.end(), path,
      [](const FileRecord& r, const std::string& p) { return r.path < p; });
  return it != files.end() && it->path == path ? &*it : nullptr;
}

int SourceSet::TotalLoc() const {
  int total = 0;
  for (const auto& f : files) total += f.loc;
  return total;
}

SourceSet DiscoverSources(const std::filesystem::path& root,
                          const CheckerConfig& config) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw ConfigError("repository root is not a readable directory: " +
                      root.string());
  }
  fs::recursive_directory_iterator it(root, ec);
  if (ec) {
    throw ConfigError("cannot read repository root " + root.string() + ": " +
                      ec.message());
  }
  SourceSet set;
  for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) break;
    const std::string rel = RelativePath(root, it->path());
    if (it->is_directory(ec)) {
      for (const auto& ex : config.exclude_globs) {
        if (GlobExcludesDirectory(ex, rel)) {
          it.disable_recursion_pending();
          break;
        }
      }
      continue;
    }
    if (!it->is_regular_file(ec)) continue;
    const bool included =
        std::any_of(config.include_globs.begin(), config.include_globs.end(),
                    [&](const std::string& g) { return GlobMatch(g, rel); });
    const bool excluded =
        std::any_of(config.exclude_globs.begin(), config.exclude_globs.end(),
                    [&](const std::string& g) { return GlobMatch(g, rel); });
    if (!included || excluded) continue;
    FileRecord rec;
    rec.path = rel;
    try {
      rec.baseline_content = ReadFileOrThrow(it->path());
    } catch (const std::exception& e) {
      set.skipped.push_back({rel, "unreadable"});
      continue;
    }
    try {
      rec.baseline_fingerprint = ComputeFingerprint(rec.baseline_content);
    } catch (const LexError& e) {
      set.skipped.push_back({rel, std::string("lexical error: ") + e.what()});
      continue;
    }
    rec.loc = CountLoc(rec.baseline_content);
    set.files.push_back(std::move(rec));
  }
  if (ec) {
    throw ConfigError("error while scanning " + root.string() + ": " +
                      ec.message());
  }
  std::sort(set.files.begin(), set.files.end(),
            [](const FileRecord& a, const FileRecord& b) {
              return a.path < b.path;
            });
  std::sort(set.skipped.begin(), set.skipped.end(),
            [](const SkippedFile& a, const SkippedFile& b) {
              return a.path < b.path;
            });
  return set;
}

std::set<std::string> DefaultMissingDeclarationCodes() {
  // 7016: package without declarations; 2307: module not resolvable at all.
  return {"TS7016", "TS2307"};
}

namespace {

constexpr std::string_view kNodeBuiltins[] = {
    "assert",      "async_hooks", "buffer",         "child_process",
    "cluster",     "console",     "constants",      "crypto",
    "dgram",       "diagnostics_channel",           "dns",
    "domain",      "events",      "fs",             "http",
    "http2",       "https",       "inspector",      "module",
    "net",         "os",          "path",           "perf_hooks",
    "process",     "punycode",    "querystring",    "readline",
    "repl",        "stream",      "string_decoder", "sys",
    "timers",      "tls",         "trace_events",   "tty",
    "url",         "util",        "v8",             "vm",
    "wasi",        "worker_threads",                "zlib",
    "test"};

bool IsPackageChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '-' || c == '.' || c == '_' || c == '~';
}

bool IsPackageSegment(std::string_view s) {
  return !s.empty() && s[0] != '.' && s[0] != '_' &&
         std::all_of(s.begin(), s.end(), IsPackageChar);
}

bool IsNodeBuiltin(std::string_view module) {
  return std::find(std::begin(kNodeBuiltins), std::end(kNodeBuiltins),
                   module) != std::end(kNodeBuiltins);
}

// nullopt when the message carries no quoted module name.
std::optional<std::string> QuotedModule(std::string_view message) {
  const size_t at = message.find("module '");
  if (at == std::string_view::npos) return std::nullopt;
  const size_t start = at + 8;
  const size_t end = message.find('\'', start);
  if (end == std::string_view::npos || end == start) return std::nullopt;
  return std::string(message.substr(start, end - start));
}

// "" for specifiers that are not packages (relative, absolute, URLs).
// nullopt for malformed package names.
std::optional<std::string> PackageOfSpecifier(std::string_view spec) {
  if (spec.starts_with(".") || spec.starts_with("/") ||
      spec.find(':') != std::string_view::npos) {
    if (spec.starts_with("node:")) return std::string(spec);
    return std::string();
  }
  const size_t first = spec.find('/');
  if (spec[0] == '@') {
    if (first == std::string_view::npos) return std::nullopt;
    const size_t second = spec.find('/', first + 1);
    const std::string_view scope = spec.substr(1, first - 1);
    const std::string_view name = spec.substr(first + 1, second - first - 1);
    if (!IsPackageSegment(scope) || !IsPackageSegment(name)) {
      return std::nullopt;
    }
    return std::string(spec.substr(0, second));
  }
  const std::string_view name = spec.substr(0, first);
  if (!IsPackageSegment(name)) return std::nullopt;
  return std::string(name);
}

}  // namespace

std::optional<std::string> MissingModuleName(
    const Diagnostic& diagnostic, const std::set<std::string>& codes) {
  if (!codes.contains(diagnostic.code)) return std::nullopt;
  const auto spec = QuotedModule(diagnostic.message);
  if (!spec) return std::nullopt;
  const auto pkg = PackageOfSpecifier(*spec);
  if (!pkg || pkg->empty()) return std::nullopt;
  return pkg;
}

std::string DeclarationPackageFor(std::string_view module) {
  if (module.starts_with("node:") || IsNodeBuiltin(module)) {
    return "@types/node";
  }
  if (module.starts_with("@")) {
    const size_t slash = module.find('/');
    return "@types/" + std::string(module.substr(1, slash - 1)) + "__" +
           std::string(module.substr(slash + 1));
  }
  return "@types/" + std::string(module);
}

MissingTypes ResolveMissingTypes(const std::vector<Diagnostic>& diagnostics,
                                 const std::set<std::string>& codes) {
  std::set<TypesPackage> found;
  MissingTypes out;
  for (const Diagnostic& d : diagnostics) {
    if (!codes.contains(d.code)) continue;
    const auto spec = QuotedModule(d.message);
    const auto pkg = spec ? PackageOfSpecifier(*spec) : std::nullopt;
    if (!pkg) {
      out.warnings.push_back(d.path + "(" + std::to_string(d.line) + "," +
                             std::to_string(d.column) +
                             "): cannot extract a module name from " + d.code);
      continue;
    }
    if (pkg->empty()) continue;
    found.insert({*pkg, DeclarationPackageFor(*pkg)});
  }
  out.packages.assign(found.begin(), found.end());
  return out;
}

std::vector<std::string> RecordTypesPackages(
    const std::filesystem::path& root, const std::vector<TypesPackage>& packages,
    bool dry_run) {
  std::vector<std::string> wanted;
  for (const auto& p : packages) wanted.push_back(p.package);
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  if (wanted.empty()) return {};

  const auto path = root / "package.json";
  ordered_json doc = ordered_json::object();
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    try {
      doc = ParseJsonc(ReadFileOrThrow(path), path.string());
    } catch (const std::runtime_error& e) {
      throw ConfigError(e.what());
    }
    if (!doc.is_object()) throw ConfigError(path.string() + " is not an object");
  }
  ordered_json& dev = doc["devDependencies"];
  if (dev.is_null()) dev = ordered_json::object();
  if (!dev.is_object()) {
    throw ConfigError(path.string() + ": devDependencies is not an object");
  }
  std::vector<std::string> added;
  for (const auto& pkg : wanted) {
    if (dev.contains(pkg)) continue;
    dev[pkg] = "*";
    added.push_back(pkg);
  }
  if (!added.empty() && !dry_run) {
    WriteFileAtomic(path, doc.dump(2) + "\n");
  }
  return added;
}

}  // namespace agentic_typer
