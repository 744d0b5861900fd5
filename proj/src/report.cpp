// Copyright 2026 The cliffsym developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cliffsym/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace cliffsym {

void Report::add_check(const std::string& name, nlohmann::ordered_json expected,
                       nlohmann::ordered_json actual) {
  const bool pass = expected == actual;
  checks.push_back({name, std::move(expected), std::move(actual), pass});
}

bool Report::all_pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["inputs"] = inputs;
  j["results"] = results;
  nlohmann::ordered_json cj = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["expected"] = c.expected;
    e["actual"] = c.actual;
    e["pass"] = c.pass;
    cj.push_back(std::move(e));
  }
  j["checks"] = std::move(cj);
  j["pass"] = all_pass();
  return j;
}

std::string Report::render_text() const {
  std::ostringstream out;
  const std::time_t now = std::time(nullptr);
  char stamp[64] = {0};
  std::strftime(stamp, sizeof stamp, "%Y-%m-%d %H:%M:%S", std::localtime(&now));
  out << "== " << command << " (cliffsym " << kVersion << ", " << stamp << ")\n";
  if (!inputs.empty()) out << "inputs:  " << inputs.dump() << "\n";
  if (!results.empty()) out << "results: " << results.dump(2) << "\n";
  if (!checks.empty()) {
    out << "checks:\n";
    for (const Check& c : checks) {
      out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
      if (!c.pass) out << "  (expected " << c.expected.dump() << ", got " << c.actual.dump() << ")";
      out << "\n";
    }
  }
  out << (all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace cliffsym
