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

#include "agentic_typer/report.h"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

#include "agentic_typer/agent.h"
#include "agentic_typer/text.h"

namespace agentic_typer {

std::vector<ManifestEntry> ParseManifest(const Json& json) {
  const Json* list = &json;
  if (json.is_object() && json.contains("suppressions")) {
    list = &json["suppressions"];
  }
  if (!list->is_array()) {
    throw std::runtime_error("manifest must be a list of suppressions");
  }
  std::vector<ManifestEntry> out;
  for (const Json& e : *list) {
    if (!e.is_object() || !e.contains("path") || !e["path"].is_string() ||
        !e.contains("anchor_content_hash") ||
        !e["anchor_content_hash"].is_string() || !e.contains("codes") ||
        !e["codes"].is_array()) {
      throw std::runtime_error(
          "manifest entries need path, anchor_content_hash and codes");
    }
    ManifestEntry m;
    m.path = e["path"].get<std::string>();
    m.anchor_content_hash = e["anchor_content_hash"].get<std::string>();
    for (const Json& c : e["codes"]) {
      if (!c.is_string()) throw std::runtime_error("codes must be strings");
      m.codes.push_back(c.get<std::string>());
    }
    std::sort(m.codes.begin(), m.codes.end());
    m.codes.erase(std::unique(m.codes.begin(), m.codes.end()), m.codes.end());
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<ManifestEntry> LoadManifest(const std::filesystem::path& path) {
  try {
    return ParseManifest(Json::parse(ReadFileOrThrow(path)));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

namespace {

std::vector<std::string> SortedCodes(std::vector<std::string> codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

}  // namespace

Json SuppressionManifest(const std::vector<Suppression>& suppressions) {
  std::vector<const Suppression*> sorted;
  for (const Suppression& s : suppressions) sorted.push_back(&s);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Suppression* a, const Suppression* b) {
                     return std::tie(a->path, a->anchor_line) <
                            std::tie(b->path, b->anchor_line);
                   });
  Json out = Json::array();
  for (const Suppression* s : sorted) {
    Json e = Json::object();
    e["path"] = s->path;
    e["anchor_line"] = s->anchor_line;
    e["anchor_content_hash"] = s->anchor_content_hash;
    e["codes"] = SortedCodes(s->suppressed_codes);
    e["category"] = CategoryTag(s->category);
    e["explanation"] = s->explanation;
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<int64_t> ParseUsd(std::string_view text) {
  if (text.empty()) return std::nullopt;
  int64_t whole = 0, frac = 0;
  size_t i = 0;
  int whole_digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    if (++whole_digits > 9) return std::nullopt;
    whole = whole * 10 + (text[i++] - '0');
  }
  int frac_digits = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      if (++frac_digits > 6) return std::nullopt;
      frac = frac * 10 + (text[i++] - '0');
    }
    if (frac_digits == 0) return std::nullopt;
  }
  if (i != text.size() || whole_digits == 0) return std::nullopt;
  for (int d = frac_digits; d < 6; ++d) frac *= 10;
  return whole * 1000000 + frac;
}

int64_t CostCents(int64_t tokens_in, int64_t tokens_out, const Price& price) {
  // Micro-dollars per million tokens times tokens: 10^12 units per dollar,
  // 10^10 per cent.
  const __int128 units = static_cast<__int128>(tokens_in) * price.in +
                         static_cast<__int128>(tokens_out) * price.out;
  const __int128 per_cent = 10000000000;
  return static_cast<int64_t>((units + per_cent / 2) / per_cent);
}

std::optional<int64_t> AdditionalPctTenths(int64_t necessary,
                                           int64_t additional) {
  if (necessary <= 0) return std::nullopt;
  return (2 * additional * 1000 + necessary) / (2 * necessary);
}

std::string FormatPercentTenths(int64_t tenths) {
  const char* sign = tenths < 0 ? "-" : "+";
  const int64_t t = tenths < 0 ? -tenths : tenths;
  return sign + std::to_string(t / 10) + "." + std::to_string(t % 10) + "%";
}

std::string FormatAdditional(int64_t necessary, int64_t additional) {
  const auto pct = AdditionalPctTenths(necessary, additional);
  return "+" + std::to_string(additional) + " (" +
         (pct ? FormatPercentTenths(*pct) : std::string("n/a")) + ")";
}

std::string FormatWallTime(int64_t seconds) {
  std::ostringstream out;
  out << seconds / 60 << ':' << std::setw(2) << std::setfill('0')
      << seconds % 60;
  return out.str();
}

std::string FormatCost(int64_t cents) {
  std::ostringstream out;
  out << '$' << cents / 100 << '.' << std::setw(2) << std::setfill('0')
      << cents % 100;
  return out.str();
}

std::string FormatLoc(int64_t loc) {
  if (loc < 1000) return std::to_string(loc);
  return std::to_string((loc + 500) / 1000) + "K";
}

std::optional<int64_t> RunReport::additional_pct_tenths() const {
  if (!necessary || !additional) return std::nullopt;
  return AdditionalPctTenths(*necessary, *additional);
}

namespace {

using DiagKey = std::tuple<std::string, std::string, std::string>;

DiagKey KeyOf(const Diagnostic& d) {
  return {d.path, d.code, NormalizeMessage(d.message)};
}

std::vector<Diagnostic> DiagnosticsOf(const Json& snapshot) {
  std::vector<Diagnostic> out;
  if (!snapshot.contains("diagnostics")) return out;
  for (const Json& d : snapshot["diagnostics"]) {
    out.push_back(DiagnosticFromJson(d));
  }
  return out;
}

int64_t Int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) return 0;
  return j[key].get<int64_t>();
}

}  // namespace

RunReport BuildReport(const std::vector<Json>& events,
                      const std::optional<std::vector<ManifestEntry>>& baseline,
                      const Price& price) {
  RunReport r;
  const Json* started = nullptr;
  const Json* finished = nullptr;
  const Json* initial = nullptr;
  const Json* final_snapshot = nullptr;
  const Json* suppressions = nullptr;
  for (const Json& e : events) {
    const std::string type = e.value("type", "");
    if (type == "run_started") {
      started = &e;
    } else if (type == "run_finished") {
      finished = &e;
    } else if (type == "workspace") {
      r.loc = Int(e, "loc");
      for (const Json& s : e.value("skipped", Json::array())) {
        r.skipped_files.push_back(s.value("path", "") + ": " +
                                  s.value("reason", ""));
      }
    } else if (type == "snapshot") {
      if (e.value("label", "") == "initial") initial = &e;
      final_snapshot = &e;
    } else if (type == "session_finished") {
      r.tokens_in += Int(e, "tokens_in");
      r.tokens_out += Int(e, "tokens_out");
    } else if (type == "suppressions") {
      suppressions = &e;
    } else if (type == "missing_types") {
      for (const Json& p : e.value("packages", Json::array())) {
        r.warnings.push_back("missing declarations for " +
                             p.value("module", "") + ": add " +
                             p.value("package", ""));
      }
      for (const Json& w : e.value("warnings", Json::array())) {
        if (w.is_string()) r.warnings.push_back(w.get<std::string>());
      }
    } else if (type == "fatal") {
      r.warnings.push_back("run aborted: " + e.value("error", ""));
    } else if (type == "not_implemented") {
      r.warnings.push_back(e.value("message", ""));
    }
  }
  if (!started) throw std::runtime_error("event log has no run_started event");
  r.repo = started->value("repo", "");
  const int64_t t0 = Int(*started, "t_ms");
  const int64_t t1 = finished ? Int(*finished, "t_ms")
                              : Int(events.back(), "t_ms");
  r.wall_seconds = std::max<int64_t>(0, (t1 - t0 + 500) / 1000);
  if (finished) {
    r.exit_code = static_cast<int>(Int(*finished, "exit_code"));
    r.complete = finished->value("complete", false);
    r.unused_directives = Int(*finished, "unused_directives");
  } else {
    r.exit_code = 2;
  }
  r.cost_cents = CostCents(r.tokens_in, r.tokens_out, price);

  const std::vector<Diagnostic> initial_diags =
      initial ? DiagnosticsOf(*initial) : std::vector<Diagnostic>{};
  const std::vector<Diagnostic> final_diags =
      final_snapshot ? DiagnosticsOf(*final_snapshot) : initial_diags;
  std::vector<Suppression> kept;
  if (suppressions) {
    for (const Json& s : suppressions->value("entries", Json::array())) {
      kept.push_back(SuppressionFromJson(s));
    }
    r.foreign_directives =
        static_cast<int64_t>(suppressions->value("foreign", Json::array()).size());
  }

  // Progress audit: every initial error is suppressed, unresolved or fixed.
  std::map<DiagKey, int64_t> initial_count, covered_count, final_count;
  for (const Diagnostic& d : initial_diags) ++initial_count[KeyOf(d)];
  for (const Suppression& s : kept) {
    for (const Diagnostic& d : s.covered) ++covered_count[KeyOf(d)];
  }
  for (const Diagnostic& d : final_diags) ++final_count[KeyOf(d)];

  std::map<std::string, FileRow> rows;
  auto row = [&](const std::string& path) -> FileRow& {
    FileRow& f = rows[path];
    f.path = path;
    return f;
  };
  for (const auto& [key, n] : initial_count) {
    const int64_t covered = covered_count.count(key) ? covered_count[key] : 0;
    const int64_t still = final_count.count(key) ? final_count[key] : 0;
    const int64_t suppressed = std::min(n, covered);
    const int64_t unresolved = std::min(n - suppressed, still);
    const int64_t fixed = n - suppressed - unresolved;
    FileRow& f = row(std::get<0>(key));
    f.initial_errors += n;
    f.resolved_by_fix += fixed;
    r.initial_errors += n;
    r.eliminated_by_suppression += suppressed;
    r.resolved_by_fix += fixed;
  }
  for (const auto& [key, covered] : covered_count) {
    const int64_t n = initial_count.count(key) ? initial_count[key] : 0;
    r.introduced_and_suppressed += std::max<int64_t>(0, covered - n);
  }
  r.unresolved = static_cast<int64_t>(final_diags.size());
  for (const Diagnostic& d : final_diags) ++row(d.path).unresolved;

  for (const Suppression& s : kept) {
    FileRow& f = row(s.path);
    ++f.suppressions;
    ++r.suppressions_total;
    if (s.category == SuppressionCategory::kBug) {
      ++f.bug;
      ++r.suppressions_bug;
      r.bug_review.push_back(
          {s.path, s.anchor_line, s.suppressed_codes, s.explanation});
    } else {
      ++f.valid;
      ++r.suppressions_valid;
    }
  }
  for (auto& [path, f] : rows) r.per_file.push_back(std::move(f));

  if (baseline) {
    std::vector<bool> used(baseline->size(), false);
    int64_t necessary = 0;
    for (const Suppression& s : kept) {
      const std::vector<std::string> codes = SortedCodes(s.suppressed_codes);
      for (size_t i = 0; i < baseline->size(); ++i) {
        const ManifestEntry& b = (*baseline)[i];
        if (used[i] || b.path != s.path ||
            b.anchor_content_hash != s.anchor_content_hash || b.codes != codes) {
          continue;
        }
        used[i] = true;
        ++necessary;
        break;
      }
    }
    r.necessary = necessary;
    r.additional = r.suppressions_total - necessary;
  }
  return r;
}

RunReport SumReports(const std::vector<RunReport>& reports) {
  RunReport t;
  t.repo = "Total";
  t.complete = true;
  bool all_baselined = !reports.empty();
  int64_t necessary = 0, additional = 0;
  for (const RunReport& r : reports) {
    t.loc += r.loc;
    t.initial_errors += r.initial_errors;
    t.resolved_by_fix += r.resolved_by_fix;
    t.eliminated_by_suppression += r.eliminated_by_suppression;
    t.unresolved += r.unresolved;
    t.suppressions_total += r.suppressions_total;
    t.suppressions_bug += r.suppressions_bug;
    t.suppressions_valid += r.suppressions_valid;
    t.wall_seconds += r.wall_seconds;
    t.tokens_in += r.tokens_in;
    t.tokens_out += r.tokens_out;
    t.cost_cents += r.cost_cents;
    t.unused_directives += r.unused_directives;
    t.foreign_directives += r.foreign_directives;
    t.introduced_and_suppressed += r.introduced_and_suppressed;
    t.exit_code = std::max(t.exit_code, r.exit_code);
    t.complete = t.complete && r.complete;
    if (r.necessary && r.additional) {
      necessary += *r.necessary;
      additional += *r.additional;
    } else {
      all_baselined = false;
    }
  }
  if (all_baselined) {
    t.necessary = necessary;
    t.additional = additional;
  }
  return t;
}

namespace {

std::vector<std::string> Cells(const RunReport& r) {
  return {r.repo,
          FormatLoc(r.loc),
          std::to_string(r.initial_errors),
          std::to_string(r.suppressions_total),
          r.necessary ? std::to_string(*r.necessary) : "n/a",
          r.necessary && r.additional
              ? FormatAdditional(*r.necessary, *r.additional)
              : "n/a",
          FormatWallTime(r.wall_seconds) + " min",
          FormatCost(r.cost_cents),
          std::to_string(r.unresolved)};
}

}  // namespace

std::string RenderTable(const std::vector<RunReport>& reports) {
  const std::vector<std::string> header = {
      "Repo",      "LOC",  "Type Errors", "Suppressions", "Necessary",
      "Additional", "Time", "Cost",       "Unresolved"};
  std::vector<std::vector<std::string>> rows;
  for (const RunReport& r : reports) rows.push_back(Cells(r));
  const std::vector<std::string> total = Cells(SumReports(reports));
  std::vector<size_t> width(header.size());
  for (size_t c = 0; c < header.size(); ++c) {
    width[c] = std::max(header[c].size(), total[c].size());
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (size_t c = 0; c < cells.size(); ++c) {
      if (c) out += "  ";
      const std::string pad(width[c] - cells[c].size(), ' ');
      out += c == 0 ? cells[c] + pad : pad + cells[c];
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  size_t total_width = 0;
  for (size_t w : width) total_width += w;
  total_width += 2 * (width.size() - 1);
  const std::string rule(total_width, '-');
  std::string out = line(header) + rule + "\n";
  for (const auto& row : rows) out += line(row);
  out += rule + "\n" + line(total);

  bool any_review = false;
  for (const RunReport& r : reports) any_review |= !r.bug_review.empty();
  if (any_review) {
    out += "\nSuppressed errors classified as bugs (review these):\n";
    for (const RunReport& r : reports) {
      for (const ReviewItem& item : r.bug_review) {
        out += "  ";
        if (reports.size() > 1) out += r.repo + ": ";
        out += item.path + ":" + std::to_string(item.anchor_line) + "  " +
               item.explanation + "\n";
      }
    }
  }
  return out;
}

Json EmitJson(const RunReport& r) {
  Json j = Json::object();
  j["schema_version"] = kReportSchemaVersion;
  j["repo"] = r.repo;
  j["loc"] = r.loc;
  j["initial_errors"] = r.initial_errors;
  j["resolved_by_fix"] = r.resolved_by_fix;
  j["eliminated_by_suppression"] = r.eliminated_by_suppression;
  j["unresolved"] = r.unresolved;
  j["suppressions"] = {{"total", r.suppressions_total},
                       {"bug", r.suppressions_bug},
                       {"valid", r.suppressions_valid}};
  j["necessary_suppressions"] =
      r.necessary ? Json(*r.necessary) : Json(nullptr);
  j["additional_suppressions"] =
      r.additional ? Json(*r.additional) : Json(nullptr);
  const auto pct = r.additional_pct_tenths();
  j["additional_pct"] = pct ? Json(FormatPercentTenths(*pct)) : Json(nullptr);
  j["wall_time"] = FormatWallTime(r.wall_seconds);
  j["wall_seconds"] = r.wall_seconds;
  j["tokens"] = {{"in", r.tokens_in}, {"out", r.tokens_out}};
  j["cost_usd"] = FormatCost(r.cost_cents).substr(1);
  j["exit_code"] = r.exit_code;
  j["complete"] = r.complete;
  j["unused_directives"] = r.unused_directives;
  j["foreign_directives"] = r.foreign_directives;
  j["introduced_and_suppressed"] = r.introduced_and_suppressed;
  Json files = Json::array();
  for (const FileRow& f : r.per_file) {
    files.push_back({{"path", f.path},
                     {"initial_errors", f.initial_errors},
                     {"suppressions", f.suppressions},
                     {"bug", f.bug},
                     {"valid", f.valid},
                     {"resolved_by_fix", f.resolved_by_fix},
                     {"unresolved", f.unresolved}});
  }
  j["per_file"] = std::move(files);
  Json review = Json::array();
  for (const ReviewItem& item : r.bug_review) {
    review.push_back({{"path", item.path},
                      {"anchor_line", item.anchor_line},
                      {"codes", item.codes},
                      {"explanation", item.explanation}});
  }
  j["bug_review"] = std::move(review);
  j["skipped_files"] = r.skipped_files;
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace agentic_typer
