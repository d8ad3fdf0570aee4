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

// Test double for an external agent. Reads turn frames on stdin and answers
// according to the mode in argv[1]:
//   scripted  one scripted edit per attempt, then finish
//   tamper    rewrites the first numeric literal, then finish
//   foreign   edits a path it does not own, then finish
//   tools     read_file, check_file, then finish
//   garbage   answers with a line that is not JSON
//   badusage  reports negative token usage
//   silent    never answers
//   exit      exits without answering
// Every frame received is appended to argv[2] when given.

#include <fstream>
#include <iostream>
#include <regex>
#include <string>
#include <thread>

#include "agentic_typer/agent.h"

namespace {

using agentic_typer::Json;

void Send(const std::string& name, Json args, int in = 10, int out = 5) {
  Json frame = {{"v", 1}, {"type", "tool"}, {"name", name},
                {"args", std::move(args)}, {"usage", {{"in", in}, {"out", out}}}};
  std::cout << frame.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string mode = argc > 1 ? argv[1] : "scripted";
  std::ofstream record;
  if (argc > 2) record.open(argv[2], std::ios::app);
  const agentic_typer::ScriptedPolicy policy =
      agentic_typer::DefaultScriptedPolicy();
  std::string line;
  int edited_attempt = -1;
  while (std::getline(std::cin, line)) {
    if (record.is_open()) record << line << std::endl;
    const Json turn = Json::parse(line);
    if (turn["type"] == "end") break;
    const int attempt = turn["attempt"];
    const int index = turn["turn"];
    const std::string path = turn["file"];
    const std::string content = turn["content"];
    if (mode == "silent") {
      std::this_thread::sleep_for(std::chrono::seconds(30));
      return 0;
    }
    if (mode == "exit") return 3;
    if (mode == "garbage") {
      std::cout << "{oops" << std::endl;
      continue;
    }
    if (mode == "badusage") {
      std::cout << R"({"v":1,"type":"tool","name":"finish","usage":{"in":-1}})"
                << std::endl;
      continue;
    }
    if (mode == "tools") {
      if (index == 0) {
        Send("read_file", {{"path", path}});
      } else if (index == 1) {
        Send("check_file", {{"path", path}});
      } else {
        Send("finish", Json::object());
      }
      continue;
    }
    if (edited_attempt == attempt) {
      Send("finish", Json::object());
      continue;
    }
    edited_attempt = attempt;
    if (mode == "tamper") {
      std::smatch m;
      const std::regex number(R"(\b\d+\b)");
      std::string changed = content;
      if (std::regex_search(content, m, number)) {
        changed.replace(m.position(0), m.length(0), m.str(0) + "1");
      }
      Send("edit_file", {{"path", path}, {"content", changed}});
    } else if (mode == "foreign") {
      Send("edit_file", {{"path", "../elsewhere.js"}, {"content", content}});
    } else {
      std::vector<agentic_typer::Diagnostic> diags;
      for (const Json& d : turn["diagnostics"]) {
        diags.push_back(agentic_typer::DiagnosticFromJson(d));
      }
      Send("edit_file",
           {{"path", path},
            {"content", agentic_typer::ScriptedEdit(content, diags, policy)}});
    }
  }
  return 0;
}
