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

#ifndef AGENTIC_TYPER_TEXT_H_
#define AGENTIC_TYPER_TEXT_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace agentic_typer {

// Splits on '\n'. Terminators, and a '\r' right before one, are dropped. A
// trailing '\n' does not produce an extra empty element, so "a\nb\n" and
// "a\nb" both yield {a, b}.
std::vector<std::string_view> SplitLines(std::string_view text);

// Number of lines as counted by a checker reporting 1-based line numbers:
// one more than the number of '\n' bytes.
int PhysicalLineCount(std::string_view text);

// "\r\n" if the first line terminator in `text` is CRLF, otherwise "\n".
std::string_view DetectNewline(std::string_view text);

std::string_view TrimWhitespace(std::string_view s);
std::string_view LeadingWhitespace(std::string_view s);

// Lowercase hex SHA-256 of `bytes`.
std::string Sha256Hex(std::string_view bytes);

// Throws std::runtime_error (with the path) on failure.
std::string ReadFileOrThrow(const std::filesystem::path& path);

// Writes through a sibling temporary file and renames it over `path`, so that
// concurrent readers never observe a partially written file.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view data);

// Repository-relative path with '/' separators.
std::string RelativePath(const std::filesystem::path& root,
                         const std::filesystem::path& file);

}  // namespace agentic_typer

#endif  // AGENTIC_TYPER_TEXT_H_
