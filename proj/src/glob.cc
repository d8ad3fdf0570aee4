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

#include "agentic_typer/glob.h"

#include <string>
#include <vector>

namespace agentic_typer {

namespace {

std::vector<std::string_view> Segments(std::string_view s) {
  std::vector<std::string_view> out;
  while (!s.empty()) {
    const size_t slash = s.find('/');
    const std::string_view seg = s.substr(0, slash);
    if (!seg.empty() && seg != ".") out.push_back(seg);
    if (slash == std::string_view::npos) break;
    s.remove_prefix(slash + 1);
  }
  return out;
}

bool SegmentMatch(std::string_view pat, std::string_view name) {
  if (!name.empty() && name[0] == '.' && !pat.empty() && pat[0] != '.') {
    return false;
  }
  // Iterative wildcard match with single backtrack point.
  size_t p = 0, n = 0, star = std::string_view::npos, mark = 0;
  while (n < name.size()) {
    if (p < pat.size() && (pat[p] == '?' || pat[p] == name[n])) {
      ++p;
      ++n;
    } else if (p < pat.size() && pat[p] == '*') {
      star = p++;
      mark = n;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      n = ++mark;
    } else {
      return false;
    }
  }
  while (p < pat.size() && pat[p] == '*') ++p;
  return p == pat.size();
}

bool MatchSegments(const std::vector<std::string_view>& pat, size_t pi,
                   const std::vector<std::string_view>& path, size_t si) {
  if (pi == pat.size()) return si == path.size();
  if (pat[pi] == "**") {
    for (size_t k = si; k <= path.size(); ++k) {
      // `**` does not descend into hidden directories.
      if (k > si && !path[k - 1].empty() && path[k - 1][0] == '.') break;
      if (MatchSegments(pat, pi + 1, path, k)) return true;
    }
    return false;
  }
  if (si == path.size()) return false;
  return SegmentMatch(pat[pi], path[si]) &&
         MatchSegments(pat, pi + 1, path, si + 1);
}

}  // namespace

bool GlobMatch(std::string_view pattern, std::string_view path) {
  return MatchSegments(Segments(pattern), 0, Segments(path), 0);
}

bool GlobExcludesDirectory(std::string_view pattern, std::string_view dir) {
  std::vector<std::string_view> pat = Segments(pattern);
  if (pat.size() < 2 || pat.back() != "**") return false;
  pat.pop_back();
  return MatchSegments(pat, 0, Segments(dir), 0);
}

}  // namespace agentic_typer
