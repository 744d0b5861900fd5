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

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cliffsym {

inline constexpr const char* kVersion = "0.1.0";

/// One verification check; pass is defined as expected == actual.
struct Check {
  std::string name;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json actual;
  bool pass = false;
};

/// Command report: echoed inputs, command-specific results, and a check
/// list. Process exit status is 0 iff all checks pass.
struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<Check> checks;

  void add_check(const std::string& name, nlohmann::ordered_json expected,
                 nlohmann::ordered_json actual);
  bool all_pass() const;

  /// Deterministic JSON form (no timestamp).
  nlohmann::ordered_json to_json() const;
  /// Human-readable form; includes a timestamp line.
  std::string render_text() const;
};

}  // namespace cliffsym
