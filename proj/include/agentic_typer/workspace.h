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

#ifndef AGENTIC_TYPER_WORKSPACE_H_
#define AGENTIC_TYPER_WORKSPACE_H_

#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "agentic_typer/checker.h"
#include "agentic_typer/fingerprint.h"

namespace agentic_typer {

// Migration phases, strictly ordered. Only MinimalSetup runs agents.
enum class Phase { kMinimalSetup = 0, kFullCoverage = 1, kStrictMode = 2 };

std::string_view PhaseName(Phase phase);  // "minimal", "full", "strict"
std::optional<Phase> ParsePhase(std::string_view name);
// The phase after `phase`; throws std::out_of_range past StrictMode.
Phase NextPhase(Phase phase);

// A fatal configuration problem (exit status 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CheckerConfig {
  bool allow_untyped_sources = true;  // allowJs
  bool check_untyped_sources = true;  // checkJs
  bool suppress_emit = true;          // noEmit
  bool no_implicit_any = false;
  bool strict = false;
  std::vector<std::string> include_globs;
  std::vector<std::string> exclude_globs;

  friend bool operator==(const CheckerConfig&, const CheckerConfig&) = default;
};

std::vector<std::string> DefaultIncludeGlobs();
// Dependency, build-output and hidden directories.
std::vector<std::string> DefaultExcludeGlobs();

CheckerConfig ConfigForPhase(Phase phase);

// The most advanced phase whose flag invariants `config` satisfies, or
// nullopt if it does not even satisfy MinimalSetup.
std::optional<Phase> InferPhase(const CheckerConfig& config);

constexpr std::string_view kCheckerConfigFile = "tsconfig.json";

// Reads <root>/tsconfig.json (comments allowed); nullopt if absent.
std::optional<CheckerConfig> ReadCheckerConfig(const std::filesystem::path& root);

// Serializes with a fixed key order, two-space indent and a trailing
// newline. Options in `preserve` that are not managed here are carried over
// after the managed ones.
std::string RenderCheckerConfig(const CheckerConfig& config,
                                std::string_view preserve = {});

struct ScaffoldOptions {
  bool overwrite = false;
  bool dry_run = false;
};

struct ScaffoldResult {
  CheckerConfig config;
  std::string rendered;
  bool changed = false;  // file contents differ from what was on disk
};

// Writes the checker configuration for `phase`. Refuses (ConfigError)
// without `overwrite` when the existing file enables noImplicitAny or strict
// while `phase` does not, or when `phase` skips ahead more than one step.
ScaffoldResult ScaffoldConfig(Phase phase, const std::filesystem::path& root,
                              const ScaffoldOptions& options = {});

// Physical lines holding at least one non-whitespace character.
int CountLoc(std::string_view content);

struct FileRecord {
  std::string path;  // repository-relative, '/'-separated
  std::string baseline_content;
  Fingerprint baseline_fingerprint;
  int loc = 0;
};

struct SkippedFile {
  std::string path;
  std::string reason;
};

struct SourceSet {
  std::vector<FileRecord> files;  // sorted by path
  std::vector<SkippedFile> skipped;

  const FileRecord* Find(const std::string& path) const;
  int TotalLoc() const;
};

// Every regular file under `root` matching an include glob and no exclude
// glob. Files that cannot be read or tokenized are listed as skipped.
// Throws ConfigError if `root` is not a readable directory.
SourceSet DiscoverSources(const std::filesystem::path& root,
                          const CheckerConfig& config);

struct TypesPackage {
  std::string module;
  std::string package;

  friend auto operator<=>(const TypesPackage&, const TypesPackage&) = default;
};

std::set<std::string> DefaultMissingDeclarationCodes();

// The bare module a missing-declaration diagnostic refers to, reduced to its
// package name ("lodash/fp" -> "lodash"). nullopt for relative or absolute
// specifiers and messages without a quoted module name.
std::optional<std::string> MissingModuleName(const Diagnostic& diagnostic,
                                             const std::set<std::string>& codes);

// "@types/<name>", with scoped "@scope/name" mangled to "@types/scope__name"
// and Node built-ins mapped to "@types/node".
std::string DeclarationPackageFor(std::string_view module);

struct MissingTypes {
  std::vector<TypesPackage> packages;  // deduplicated, sorted
  std::vector<std::string> warnings;
};

MissingTypes ResolveMissingTypes(const std::vector<Diagnostic>& diagnostics,
                                 const std::set<std::string>& codes =
                                     DefaultMissingDeclarationCodes());

// Adds each package to devDependencies of <root>/package.json with version
// "*" (creating the file if needed). Returns the packages actually added.
std::vector<std::string> RecordTypesPackages(
    const std::filesystem::path& root, const std::vector<TypesPackage>& packages,
    bool dry_run = false);

}  // namespace agentic_typer

#endif  // AGENTIC_TYPER_WORKSPACE_H_
