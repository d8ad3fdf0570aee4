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

#ifndef AGENTIC_TYPER_REPORT_H_
#define AGENTIC_TYPER_REPORT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agentic_typer/event_log.h"
#include "agentic_typer/suppression.h"

namespace agentic_typer {

constexpr int kReportSchemaVersion = 1;

// One entry of a suppression manifest. Run manifests and baselines share
// this shape.
struct ManifestEntry {
  std::string path;
  std::string anchor_content_hash;
  std::vector<std::string> codes;  // sorted, unique
};

// Accepts a JSON list of {path, anchor_content_hash, codes}. Extra keys are
// ignored. Throws std::runtime_error on malformed input.
std::vector<ManifestEntry> ParseManifest(const Json& json);
std::vector<ManifestEntry> LoadManifest(const std::filesystem::path& path);

// Manifest document for the suppressions a run left in place, ordered by
// path and line.
Json SuppressionManifest(const std::vector<Suppression>& suppressions);

// Prices in micro-dollars per million tokens.
struct Price {
  int64_t in = 0;
  int64_t out = 0;
};

// "3", "3.5", "0.000125" -> micro-dollars. nullopt if not a non-negative
// decimal with at most six fractional digits.
std::optional<int64_t> ParseUsd(std::string_view text);

// (tokens_in * price_in + tokens_out * price_out) / 10^6, rounded half-up to
// cents.
int64_t CostCents(int64_t tokens_in, int64_t tokens_out, const Price& price);

// additional / necessary * 100 rounded half-up to one decimal, in tenths of
// a percent. nullopt when necessary is zero.
std::optional<int64_t> AdditionalPctTenths(int64_t necessary,
                                           int64_t additional);

std::string FormatPercentTenths(int64_t tenths);      // 68 -> "+6.8%"
std::string FormatAdditional(int64_t necessary, int64_t additional);
std::string FormatWallTime(int64_t seconds);           // 1011 -> "16:51"
std::string FormatCost(int64_t cents);                 // 2285 -> "$22.85"
std::string FormatLoc(int64_t loc);                    // 75000 -> "75K"

struct FileRow {
  std::string path;
  int64_t initial_errors = 0;
  int64_t suppressions = 0;
  int64_t bug = 0;
  int64_t valid = 0;
  int64_t resolved_by_fix = 0;
  int64_t unresolved = 0;
};

struct ReviewItem {
  std::string path;
  int anchor_line = 0;
  std::vector<std::string> codes;
  std::string explanation;
};

struct RunReport {
  std::string repo;
  int64_t loc = 0;
  int64_t initial_errors = 0;
  int64_t resolved_by_fix = 0;
  int64_t eliminated_by_suppression = 0;
  int64_t unresolved = 0;
  int64_t suppressions_total = 0;
  int64_t suppressions_bug = 0;
  int64_t suppressions_valid = 0;
  std::optional<int64_t> necessary;
  std::optional<int64_t> additional;
  int64_t wall_seconds = 0;
  int64_t tokens_in = 0;
  int64_t tokens_out = 0;
  int64_t cost_cents = 0;
  int exit_code = 0;
  bool complete = false;
  int64_t unused_directives = 0;
  int64_t foreign_directives = 0;
  // Errors covered by this run's directives that were not in the initial
  // snapshot (they surfaced during the run).
  int64_t introduced_and_suppressed = 0;
  std::vector<FileRow> per_file;
  std::vector<ReviewItem> bug_review;
  std::vector<std::string> skipped_files;
  std::vector<std::string> warnings;

  std::optional<int64_t> additional_pct_tenths() const;
};

// Rebuilds the report from a run's events. Throws std::runtime_error if the
// log has no run_started event.
RunReport BuildReport(const std::vector<Json>& events,
                      const std::optional<std::vector<ManifestEntry>>& baseline,
                      const Price& price);

// Fixed-width text table, one row per report plus a Total row.
std::string RenderTable(const std::vector<RunReport>& reports);

// The Total row: counts, times and costs summed; necessary/additional only
// when every report has them.
RunReport SumReports(const std::vector<RunReport>& reports);

// Stable key order, schema_version first.
Json EmitJson(const RunReport& report);

}  // namespace agentic_typer

#endif  // AGENTIC_TYPER_REPORT_H_
