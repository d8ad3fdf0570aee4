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

#include "agentic_typer/event_log.h"

#include <chrono>

#include "agentic_typer/text.h"

namespace agentic_typer {

EventLog::EventLog(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  out_.emplace(path, std::ios::binary | std::ios::trunc);
  if (!*out_) throw std::runtime_error("cannot write " + path.string());
}

uint64_t EventLog::Append(const std::string& type, Json payload) {
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  std::lock_guard<std::mutex> lock(mu_);
  const uint64_t seq = events_.size();
  Json event = Json::object();
  event["seq"] = seq;
  event["type"] = type;
  event["t_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
  for (auto& [k, v] : payload.items()) event[k] = std::move(v);
  if (out_) {
    *out_ << event.dump(-1, ' ', false, Json::error_handler_t::replace) << '\n';
    out_->flush();
  }
  events_.push_back(std::move(event));
  return seq;
}

std::vector<Json> EventLog::events() const {
  std::lock_guard<std::mutex> lock(mu_);
  return events_;
}

std::vector<Json> ParseEventLog(const std::string& text) {
  std::vector<Json> events;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (TrimWhitespace(line).empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw CorruptLogError(line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw CorruptLogError(line_no, "event is not an object");
    if (!j.contains("type") || !j["type"].is_string()) {
      throw CorruptLogError(line_no, "event has no type");
    }
    if (!j.contains("seq") || !j["seq"].is_number_unsigned() ||
        j["seq"].get<uint64_t>() != events.size()) {
      throw CorruptLogError(line_no, "sequence number out of order");
    }
    events.push_back(std::move(j));
  }
  return events;
}

std::vector<Json> ReadEventLog(const std::filesystem::path& path) {
  std::string text;
  try {
    text = ReadFileOrThrow(path);
  } catch (const std::exception& e) {
    throw CorruptLogError(0, e.what());
  }
  return ParseEventLog(text);
}

}  // namespace agentic_typer
