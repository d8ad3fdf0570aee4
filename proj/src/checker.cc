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

#include "agentic_typer/checker.h"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "agentic_typer/subprocess.h"
#include "agentic_typer/text.h"

namespace agentic_typer {

namespace {

// Parses a positive decimal without leading zeros.
std::optional<int> ParsePositive(std::string_view s) {
  if (s.empty() || s[0] == '0' || s.size() > 9) return std::nullopt;
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

bool IsCode(std::string_view s) {
  size_t i = 0;
  while (i < s.size() && s[i] >= 'A' && s[i] <= 'Z') ++i;
  if (i == 0 || i == s.size()) return false;
  for (size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') return false;
  }
  return true;
}

std::optional<Diagnostic> TryParseAt(std::string_view line, size_t open) {
  const std::string_view path = line.substr(0, open);
  std::string_view rest = line.substr(open + 1);
  const size_t comma = rest.find(',');
  const size_t close = rest.find("): ");
  if (comma == std::string_view::npos || close == std::string_view::npos ||
      comma > close) {
    return std::nullopt;
  }
  const auto ln = ParsePositive(rest.substr(0, comma));
  const auto col = ParsePositive(rest.substr(comma + 1, close - comma - 1));
  if (!ln || !col) return std::nullopt;
  rest.remove_prefix(close + 3);

  Severity severity;
  if (rest.starts_with("error ")) {
    severity = Severity::kError;
    rest.remove_prefix(6);
  } else if (rest.starts_with("warning ")) {
    severity = Severity::kWarning;
    rest.remove_prefix(8);
  } else {
    return std::nullopt;
  }
  const size_t colon = rest.find(": ");
  if (colon == std::string_view::npos) return std::nullopt;
  const std::string_view code = rest.substr(0, colon);
  if (!IsCode(code)) return std::nullopt;
  Diagnostic d;
  d.path = std::string(path);
  d.line = *ln;
  d.column = *col;
  d.code = std::string(code);
  d.message = std::string(rest.substr(colon + 2));
  d.severity = severity;
  return d;
}

std::string_view SeverityName(Severity s) {
  return s == Severity::kError ? "error" : "warning";
}

}  // namespace

std::optional<Diagnostic> ParseDiagnosticLine(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty() || line[0] == ' ' || line[0] == '\t') return std::nullopt;
  for (size_t open = line.find('('); open != std::string_view::npos;
       open = line.find('(', open + 1)) {
    if (open == 0) continue;
    if (auto d = TryParseAt(line, open)) return d;
  }
  return std::nullopt;
}

std::string RenderDiagnostic(const Diagnostic& d) {
  std::string out = d.path;
  out += '(';
  out += std::to_string(d.line);
  out += ',';
  out += std::to_string(d.column);
  out += "): ";
  out += SeverityName(d.severity);
  out += ' ';
  out += d.code;
  out += ": ";
  out += d.message;
  return out;
}

std::vector<Diagnostic> CheckerOutput::diagnostics() const {
  std::vector<Diagnostic> out;
  for (const Item& item : items) {
    if (const auto* d = std::get_if<Diagnostic>(&item)) out.push_back(*d);
  }
  return out;
}

std::vector<std::string> CheckerOutput::other_lines() const {
  std::vector<std::string> out;
  for (const Item& item : items) {
    if (const auto* s = std::get_if<std::string>(&item)) {
      if (!TrimWhitespace(*s).empty()) out.push_back(*s);
    }
  }
  return out;
}

CheckerOutput ParseCheckerOutput(std::string_view text) {
  CheckerOutput out;
  size_t start = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    if (auto d = ParseDiagnosticLine(line)) {
      out.items.emplace_back(std::move(*d));
      continue;
    }
    const bool continuation = !line.empty() &&
                              (line[0] == ' ' || line[0] == '\t') &&
                              !out.items.empty() &&
                              std::holds_alternative<Diagnostic>(out.items.back());
    if (continuation) {
      auto& msg = std::get<Diagnostic>(out.items.back()).message;
      msg += '\n';
      msg += line;
    } else {
      out.items.emplace_back(std::string(line));
    }
  }
  return out;
}

std::string RenderCheckerOutput(const CheckerOutput& output) {
  std::string out;
  for (const auto& item : output.items) {
    if (const auto* d = std::get_if<Diagnostic>(&item)) {
      out += RenderDiagnostic(*d);
    } else {
      out += std::get<std::string>(item);
    }
    out += '\n';
  }
  return out;
}

std::vector<Diagnostic> ErrorSnapshot::errors() const {
  std::vector<Diagnostic> out;
  out.reserve(total);
  for (const auto& [path, diags] : by_file) {
    out.insert(out.end(), diags.begin(), diags.end());
  }
  return out;
}

size_t ErrorSnapshot::ErrorsIn(const std::string& path) const {
  const auto it = by_file.find(path);
  return it == by_file.end() ? 0 : it->second.size();
}

ErrorSnapshot MakeSnapshot(std::vector<Diagnostic> diagnostics) {
  ErrorSnapshot snap;
  snap.taken_at = std::chrono::steady_clock::now();
  for (Diagnostic& d : diagnostics) {
    if (d.severity == Severity::kWarning) {
      snap.warnings.push_back(std::move(d));
    } else {
      snap.by_file[d.path].push_back(std::move(d));
      ++snap.total;
    }
  }
  for (auto& [path, diags] : snap.by_file) {
    std::stable_sort(diags.begin(), diags.end(),
                     [](const Diagnostic& a, const Diagnostic& b) {
                       return std::tie(a.line, a.column, a.code) <
                              std::tie(b.line, b.column, b.code);
                     });
  }
  return snap;
}

ErrorSnapshot RestrictToFile(const ErrorSnapshot& snapshot,
                             const std::string& path) {
  ErrorSnapshot out;
  out.taken_at = snapshot.taken_at;
  out.notes = snapshot.notes;
  const auto it = snapshot.by_file.find(path);
  if (it != snapshot.by_file.end()) {
    out.by_file[path] = it->second;
    out.total = it->second.size();
  }
  for (const Diagnostic& w : snapshot.warnings) {
    if (w.path == path) out.warnings.push_back(w);
  }
  return out;
}

std::string NormalizeMessage(std::string_view message) {
  std::string out;
  bool pending_space = false;
  for (char c : message) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

SnapshotDiff DiffSnapshots(const ErrorSnapshot& before,
                           const ErrorSnapshot& after) {
  using Key = std::tuple<std::string, std::string, std::string>;
  auto key_of = [](const Diagnostic& d) {
    return Key{d.path, d.code, NormalizeMessage(d.message)};
  };
  std::map<Key, std::vector<const Diagnostic*>> lhs, rhs;
  for (const auto& [path, diags] : before.by_file) {
    for (const Diagnostic& d : diags) lhs[key_of(d)].push_back(&d);
  }
  for (const auto& [path, diags] : after.by_file) {
    for (const Diagnostic& d : diags) rhs[key_of(d)].push_back(&d);
  }
  SnapshotDiff diff;
  for (const auto& [key, ds] : lhs) {
    const auto it = rhs.find(key);
    const size_t kept = it == rhs.end() ? 0 : it->second.size();
    for (size_t i = kept; i < ds.size(); ++i) diff.resolved.push_back(*ds[i]);
  }
  for (const auto& [key, ds] : rhs) {
    const auto it = lhs.find(key);
    const size_t kept = it == lhs.end() ? 0 : it->second.size();
    for (size_t i = kept; i < ds.size(); ++i) diff.introduced.push_back(*ds[i]);
  }
  return diff;
}

std::filesystem::path ResolveCheckerBinary(const std::filesystem::path& root,
                                           const CheckerOptions& options) {
  if (options.explicit_binary) {
    if (auto p = FindOnPath(options.explicit_binary->string())) return *p;
    throw CheckerEnvironmentError("type checker not found at " +
                                  options.explicit_binary->string());
  }
  const auto local = root / "node_modules" / ".bin" / "tsc";
  std::error_code ec;
  if (std::filesystem::exists(local, ec)) return local;
  if (auto p = FindOnPath("tsc")) return *p;
  throw CheckerEnvironmentError(
      "type checker `tsc` not found; install it with `npm install --save-dev "
      "typescript` or pass --checker <path>");
}

Checker::Checker(std::filesystem::path root, CheckerOptions options)
    : root_(std::move(root)),
      options_(std::move(options)),
      binary_(ResolveCheckerBinary(root_, options_)) {}

uint64_t Checker::runs() const {
  std::lock_guard<std::mutex> lock(mu_);
  return completed_;
}

ErrorSnapshot Checker::RunOnce() const {
  const std::vector<std::string> argv = {
      binary_.string(), "-p", options_.config_file, "--pretty", "false"};
  ProcessResult r;
  try {
    r = RunProcess(argv, root_);
  } catch (const std::exception& e) {
    throw CheckerEnvironmentError(e.what());
  }
  const CheckerOutput parsed = ParseCheckerOutput(r.out);
  std::vector<Diagnostic> diags = parsed.diagnostics();
  if (r.exit_code != 0 && diags.empty()) {
    throw CheckerCrash("type checker exited with status " +
                           std::to_string(r.exit_code) +
                           " without diagnostics",
                       r.out + r.err);
  }
  ErrorSnapshot snap = MakeSnapshot(std::move(diags));
  snap.notes = parsed.other_lines();
  return snap;
}

ErrorSnapshot Checker::Check() {
  std::unique_lock<std::mutex> lock(mu_);
  const uint64_t needed = started_ + 1;
  while (true) {
    if (completed_ >= needed) {
      if (last_error_) std::rethrow_exception(last_error_);
      return last_;
    }
    if (!running_) {
      running_ = true;
      const uint64_t gen = ++started_;
      lock.unlock();
      ErrorSnapshot snap;
      std::exception_ptr error;
      try {
        snap = RunOnce();
      } catch (...) {
        error = std::current_exception();
      }
      lock.lock();
      running_ = false;
      completed_ = gen;
      last_ = std::move(snap);
      last_error_ = error;
      cv_.notify_all();
      continue;
    }
    cv_.wait(lock);
  }
}

ErrorSnapshot Checker::CheckFile(const std::string& path) {
  return RestrictToFile(Check(), path);
}

}  // namespace agentic_typer
