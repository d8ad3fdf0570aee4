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

#ifndef AGENTIC_TYPER_EVENT_LOG_H_
#define AGENTIC_TYPER_EVENT_LOG_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace agentic_typer {

using Json = nlohmann::ordered_json;

// Append-only JSON-lines log of a run. Every event gets "seq" (0-based,
// gap-free), "type" and "t_ms" (wall clock, milliseconds since the epoch)
// ahead of its payload. Safe to append from several threads.
class EventLog {
 public:
  // In-memory only.
  EventLog() = default;
  // Also streams each event to `path` (truncated first).
  explicit EventLog(const std::filesystem::path& path);

  // Returns the sequence number assigned.
  uint64_t Append(const std::string& type, Json payload = Json::object());

  std::vector<Json> events() const;

 private:
  mutable std::mutex mu_;
  std::vector<Json> events_;
  std::optional<std::ofstream> out_;
};

class CorruptLogError : public std::runtime_error {
 public:
  CorruptLogError(int line, const std::string& what)
      : std::runtime_error("event log line " + std::to_string(line) + ": " +
                           what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Parses a JSON-lines log. Throws CorruptLogError citing the first bad line
// (1-based): malformed JSON, a non-object, a missing "type", or a "seq" out
// of order.
std::vector<Json> ReadEventLog(const std::filesystem::path& path);
std::vector<Json> ParseEventLog(const std::string& text);

}  // namespace agentic_typer

#endif  // AGENTIC_TYPER_EVENT_LOG_H_
