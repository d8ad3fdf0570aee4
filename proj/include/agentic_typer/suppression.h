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

#ifndef AGENTIC_TYPER_SUPPRESSION_H_
#define AGENTIC_TYPER_SUPPRESSION_H_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "agentic_typer/checker.h"

namespace agentic_typer {

enum class SuppressionCategory { kBug, kValidPattern };

// "bug" / "valid", as written in the directive tag.
std::string_view CategoryTag(SuppressionCategory c);
std::optional<SuppressionCategory> ParseCategoryTag(std::string_view tag);

struct Suppression {
  std::string path;
  int anchor_line = 0;  // the line the directive governs (directive + 1)
  SuppressionCategory category = SuppressionCategory::kValidPattern;
  std::string explanation;  // single line, non-empty
  std::vector<std::string> suppressed_codes;
  // The error diagnostics on the anchor line when the directive was added.
  std::vector<Diagnostic> covered;
  // Hash of the trimmed anchor line; stable under line shifts.
  std::string anchor_content_hash;
};

constexpr std::string_view kDirectiveKeyword = "@ts-expect-error";
constexpr std::string_view kToolTagPrefix = "[agentic-typer:";

// `<indent>// @ts-expect-error -- [agentic-typer:<bug|valid>] <explanation>`
std::string RenderDirective(SuppressionCategory category,
                            std::string_view explanation,
                            std::string_view indent = {});
std::string RenderDirective(const Suppression& s, std::string_view indent = {});

struct ParsedDirective {
  SuppressionCategory category;
  std::string explanation;
};

// Matches ^[ \t]*// @ts-expect-error -- \[agentic-typer:(bug|valid)\] .+$
std::optional<ParsedDirective> ParseDirective(std::string_view line);

// A `//` comment line naming a suppression directive that is not in the
// tool's tagged form. Such lines are counted but never edited.
bool IsForeignDirective(std::string_view line);

// Single line, no tabs or control characters; falls back to `fallback` when
// nothing printable remains.
std::string SanitizeExplanation(std::string_view text,
                                std::string_view fallback = "type error");

std::string AnchorContentHash(std::string_view line);

class SuppressionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inserts the directive for `s` directly above `line` (1-based), indented
// like that line, using the file's newline convention. Throws
// SuppressionError when the line is out of range, is itself a directive, is
// already governed by a directive, or begins inside a comment, string or
// template literal (where a comment line would not be a comment or would not
// be seen by the checker).
std::string InsertSuppression(std::string_view content, int line,
                              const Suppression& s);

struct RemovedDirective {
  std::string path;
  int line = 0;  // line the directive occupied before removal
  std::string text;
  std::string anchor_content_hash;  // of the line that followed it
};

// Unused-directive diagnostic code of the checker.
constexpr std::string_view kUnusedDirectiveCode = "TS2578";

// Removes every tool-tagged directive the checker reported as unused.
// Foreign directives are left in place.
std::vector<RemovedDirective> CleanupUnused(
    const std::filesystem::path& root, const ErrorSnapshot& snapshot,
    std::string_view unused_code = kUnusedDirectiveCode, bool dry_run = false);

struct ForeignDirective {
  std::string path;
  int line = 0;
  std::string text;
};

struct SuppressionScan {
  std::vector<Suppression> tagged;
  std::vector<ForeignDirective> foreign;
};

// Directive lines in `content`. Codes are recovered from an explanation
// that starts with "TS1234[, TS5678]: ".
SuppressionScan ScanContent(const std::string& path, std::string_view content);

SuppressionScan ScanSuppressions(const std::filesystem::path& root,
                                 const std::vector<std::string>& paths);

}  // namespace agentic_typer

#endif  // AGENTIC_TYPER_SUPPRESSION_H_
