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

#include "agentic_typer/suppression.h"

#include <algorithm>
#include <map>

#include "agentic_typer/fingerprint.h"
#include "agentic_typer/text.h"

namespace agentic_typer {

std::string_view CategoryTag(SuppressionCategory c) {
  return c == SuppressionCategory::kBug ? "bug" : "valid";
}

std::optional<SuppressionCategory> ParseCategoryTag(std::string_view tag) {
  if (tag == "bug") return SuppressionCategory::kBug;
  if (tag == "valid") return SuppressionCategory::kValidPattern;
  return std::nullopt;
}

std::string RenderDirective(SuppressionCategory category,
                            std::string_view explanation,
                            std::string_view indent) {
  std::string out(indent);
  out += "// @ts-expect-error -- [agentic-typer:";
  out += CategoryTag(category);
  out += "] ";
  out += explanation;
  return out;
}

std::string RenderDirective(const Suppression& s, std::string_view indent) {
  return RenderDirective(s.category, s.explanation, indent);
}

std::optional<ParsedDirective> ParseDirective(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  line.remove_prefix(LeadingWhitespace(line).size());
  constexpr std::string_view kHead = "// @ts-expect-error -- [agentic-typer:";
  if (!line.starts_with(kHead)) return std::nullopt;
  line.remove_prefix(kHead.size());
  const size_t close = line.find("] ");
  if (close == std::string_view::npos) return std::nullopt;
  const auto category = ParseCategoryTag(line.substr(0, close));
  if (!category) return std::nullopt;
  const std::string_view explanation = line.substr(close + 2);
  if (explanation.empty() ||
      explanation.find_first_of("\n\r") != std::string_view::npos) {
    return std::nullopt;
  }
  return ParsedDirective{*category, std::string(explanation)};
}

bool IsForeignDirective(std::string_view line) {
  const std::string_view t = TrimWhitespace(line);
  if (!t.starts_with("//") && !t.starts_with("/*")) return false;
  if (t.find(kDirectiveKeyword) == std::string_view::npos &&
      t.find("@ts-ignore") == std::string_view::npos) {
    return false;
  }
  return !ParseDirective(line).has_value();
}

std::string SanitizeExplanation(std::string_view text,
                                std::string_view fallback) {
  std::string out;
  bool space = false;
  for (unsigned char c : text) {
    if (c < 0x20 || c == 0x7f) {
      space = !out.empty();
      continue;
    }
    if (c == ' ') {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += static_cast<char>(c);
  }
  if (out.empty()) out = std::string(fallback);
  return out;
}

std::string AnchorContentHash(std::string_view line) {
  return Sha256Hex(TrimWhitespace(line));
}

namespace {

// Byte offset where 1-based `line` starts; npos past the end.
size_t LineOffset(std::string_view content, int line) {
  size_t off = 0;
  for (int l = 1; l < line; ++l) {
    const size_t nl = content.find('\n', off);
    if (nl == std::string_view::npos) return std::string_view::npos;
    off = nl + 1;
  }
  return off;
}

bool GovernsNextLine(std::string_view line) {
  return ParseDirective(line).has_value() || IsForeignDirective(line);
}

std::vector<std::string> CodesFromExplanation(std::string_view explanation) {
  std::vector<std::string> codes;
  const size_t colon = explanation.find(": ");
  if (colon == std::string_view::npos) return codes;
  std::string_view head = explanation.substr(0, colon);
  while (!head.empty()) {
    const size_t comma = head.find(", ");
    const std::string_view code = head.substr(0, comma);
    size_t i = 0;
    while (i < code.size() && code[i] >= 'A' && code[i] <= 'Z') ++i;
    if (i == 0 || i == code.size() ||
        !std::all_of(code.begin() + i, code.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      return {};
    }
    codes.emplace_back(code);
    if (comma == std::string_view::npos) break;
    head.remove_prefix(comma + 2);
  }
  return codes;
}

}  // namespace

std::string InsertSuppression(std::string_view content, int line,
                              const Suppression& s) {
  const std::vector<std::string_view> lines = SplitLines(content);
  if (line < 1 || line > static_cast<int>(lines.size())) {
    throw SuppressionError("line " + std::to_string(line) + " out of range");
  }
  if (s.explanation.empty() ||
      s.explanation.find_first_of("\r\n") != std::string::npos) {
    throw SuppressionError("explanation must be a single non-empty line");
  }
  const std::string_view target = lines[line - 1];
  if (GovernsNextLine(target)) {
    throw SuppressionError("line " + std::to_string(line) +
                           " is itself a suppression directive");
  }
  if (line > 1 && GovernsNextLine(lines[line - 2])) {
    throw SuppressionError("line " + std::to_string(line) +
                           " is already governed by a directive");
  }
  ScanResult scan;
  try {
    scan = Scan(content);
  } catch (const LexError& e) {
    throw SuppressionError(std::string("cannot tokenize: ") + e.what());
  }
  if (!scan.line_starts_in_code[line - 1]) {
    throw SuppressionError("line " + std::to_string(line) +
                           " starts inside a comment or literal");
  }
  const size_t off = LineOffset(content, line);
  std::string out;
  out.reserve(content.size() + s.explanation.size() + 64);
  out.append(content.substr(0, off));
  out += RenderDirective(s, LeadingWhitespace(target));
  out += DetectNewline(content);
  out.append(content.substr(off));
  return out;
}

std::vector<RemovedDirective> CleanupUnused(const std::filesystem::path& root,
                                            const ErrorSnapshot& snapshot,
                                            std::string_view unused_code,
                                            bool dry_run) {
  std::map<std::string, std::vector<int>> by_file;
  for (const auto& [path, diags] : snapshot.by_file) {
    for (const Diagnostic& d : diags) {
      if (d.code == unused_code) by_file[path].push_back(d.line);
    }
  }
  std::vector<RemovedDirective> removed;
  for (auto& [path, lines] : by_file) {
    std::sort(lines.begin(), lines.end(), std::greater<>());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    const auto file = root / path;
    std::string content;
    try {
      content = ReadFileOrThrow(file);
    } catch (const std::exception&) {
      continue;
    }
    std::vector<RemovedDirective> here;
    for (int line : lines) {
      const size_t off = LineOffset(content, line);
      if (off == std::string_view::npos || off >= content.size()) continue;
      const size_t nl = content.find('\n', off);
      const size_t end = nl == std::string::npos ? content.size() : nl + 1;
      const std::string_view text = std::string_view(content).substr(
          off, (nl == std::string::npos ? content.size() : nl) - off);
      if (!ParseDirective(text)) continue;
      const size_t next_end = content.find('\n', end);
      const std::string_view next = std::string_view(content).substr(
          end, (next_end == std::string::npos ? content.size() : next_end) - end);
      RemovedDirective r;
      r.path = path;
      r.line = line;
      r.text = std::string(TrimWhitespace(text));
      r.anchor_content_hash = AnchorContentHash(next);
      here.push_back(std::move(r));
      content.erase(off, end - off);
    }
    if (here.empty()) continue;
    if (!dry_run) WriteFileAtomic(file, content);
    // Report top to bottom.
    removed.insert(removed.end(), here.rbegin(), here.rend());
  }
  return removed;
}

SuppressionScan ScanContent(const std::string& path, std::string_view content) {
  SuppressionScan scan;
  const std::vector<std::string_view> lines = SplitLines(content);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find("@ts-") == std::string_view::npos) continue;
    if (auto parsed = ParseDirective(lines[i])) {
      Suppression s;
      s.path = path;
      s.anchor_line = static_cast<int>(i) + 2;
      s.category = parsed->category;
      s.explanation = std::move(parsed->explanation);
      s.suppressed_codes = CodesFromExplanation(s.explanation);
      s.anchor_content_hash =
          AnchorContentHash(i + 1 < lines.size() ? lines[i + 1] : "");
      scan.tagged.push_back(std::move(s));
    } else if (IsForeignDirective(lines[i])) {
      scan.foreign.push_back(
          {path, static_cast<int>(i) + 1, std::string(TrimWhitespace(lines[i]))});
    }
  }
  return scan;
}

SuppressionScan ScanSuppressions(const std::filesystem::path& root,
                                 const std::vector<std::string>& paths) {
  SuppressionScan all;
  for (const std::string& p : paths) {
    std::string content;
    try {
      content = ReadFileOrThrow(root / p);
    } catch (const std::exception&) {
      continue;
    }
    SuppressionScan one = ScanContent(p, content);
    all.tagged.insert(all.tagged.end(), one.tagged.begin(), one.tagged.end());
    all.foreign.insert(all.foreign.end(), one.foreign.begin(),
                       one.foreign.end());
  }
  return all;
}

}  // namespace agentic_typer
