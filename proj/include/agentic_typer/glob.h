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

#ifndef AGENTIC_TYPER_GLOB_H_
#define AGENTIC_TYPER_GLOB_H_

#include <string_view>

namespace agentic_typer {

// Matches a '/'-separated relative path against a glob in the style of the
// checker's include/exclude lists: `**` spans any number of whole segments,
// `*` and `?` stay within a segment, and neither matches a leading '.' of a
// segment.
bool GlobMatch(std::string_view pattern, std::string_view path);

// True when every path below `dir` is matched by `pattern`, which lets a
// directory walk skip `dir` entirely (e.g. "**/node_modules/**").
bool GlobExcludesDirectory(std::string_view pattern, std::string_view dir);

}  // namespace agentic_typer

#endif  // AGENTIC_TYPER_GLOB_H_
