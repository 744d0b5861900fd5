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

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CLIFFSYM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) result.output.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

std::string example_circuit() {
  return std::string(CLIFFSYM_CIRCUIT_DIR) + "/example_2x2.json";
}

}  // namespace

TEST_CASE("orders emits the cardinality rows and exits 0") {
  const RunResult r = run_cli("orders --max 4 --json");
  REQUIRE(r.exit_code == 0);
  const auto j = parse(r.output);
  CHECK(j["command"] == "orders");
  CHECK(j["pass"] == true);
  REQUIRE(j["results"]["rows"].size() == 3);
  CHECK(j["results"]["rows"][0]["phase_space"] == 4);
  CHECK(j["results"]["rows"][0]["sl2_formula"] == 6);
  CHECK(j["results"]["rows"][0]["clifford_quotient"] == 24);
  for (const auto& check : j["checks"]) CHECK(check["pass"] == true);
}

TEST_CASE("orders with the smallest bound emits a single row") {
  const RunResult r = run_cli("orders --max 2 --json");
  REQUIRE(r.exit_code == 0);
  const auto j = parse(r.output);
  REQUIRE(j["results"]["rows"].size() == 1);
  CHECK(j["results"]["rows"][0]["n"] == 2);
  CHECK(j["results"]["rows"][0]["sl2_enumerated"] == 6);
}

TEST_CASE("orders rejects an out-of-range bound with exit 2") {
  CHECK(run_cli("orders --max 99").exit_code == 2);
  CHECK(run_cli("orders --max 1").exit_code == 2);
}

TEST_CASE("a failing check exits 1") {
  // an absurdly loose tolerance merges distinct closure elements, so the
  // 192-count check genuinely fails
  const RunResult r = run_cli("closure 2 --tol 0.51 --json");
  CHECK(r.exit_code == 1);
  const auto j = parse(r.output);
  CHECK(j["pass"] == false);
  CHECK(j["results"]["size"] < 192);
}

TEST_CASE("JSON reports are byte-identical across runs") {
  const RunResult a = run_cli("orders --max 6 --json");
  const RunResult b = run_cli("orders --max 6 --json");
  CHECK(a.output == b.output);

  const RunResult v1 = run_cli("verify-single 3 --seed 5 --json");
  const RunResult v2 = run_cli("verify-single 3 --seed 5 --json");
  CHECK(v1.exit_code == 0);
  CHECK(v1.output == v2.output);
}

TEST_CASE("decompose prints the canonical factor lists") {
  const RunResult r = run_cli("decompose 15 12 --json");
  REQUIRE(r.exit_code == 0);
  const auto j = parse(r.output);
  CHECK(j["results"]["display"] == "SL(2,Z_4) x Sp(4,Z_3) x SL(2,Z_5)");

  const RunResult big = run_cli("decompose 180 150 --json");
  REQUIRE(big.exit_code == 0);
  CHECK(parse(big.output)["results"]["display"] == "Sp_[2,4] x Sp_[3,9] x Sp_[5,25]");

  const RunResult six = run_cli("decompose 6 --json");
  REQUIRE(six.exit_code == 0);
  CHECK(parse(six.output)["results"]["display"] == "SL(2,Z_2) x SL(2,Z_3)");
}

TEST_CASE("lift emits a verified word and rejects nonunit determinants") {
  const RunResult id = run_cli("lift 3 1 0 0 1 --json");
  REQUIRE(id.exit_code == 0);
  CHECK(parse(id.output)["results"]["length"] == 0);

  const RunResult swap = run_cli("lift 2 0 1 1 0 --json");
  REQUIRE(swap.exit_code == 0);
  const auto j = parse(swap.output);
  CHECK(j["results"]["word"] == nlohmann::json::array({"S"}));
  CHECK(j["pass"] == true);

  CHECK(run_cli("lift 3 1 0 0 2").exit_code == 2);
}

TEST_CASE("closure reports the 192-element group at N = 2") {
  const RunResult r = run_cli("closure 2 --json");
  REQUIRE(r.exit_code == 0);
  const auto j = parse(r.output);
  CHECK(j["results"]["size"] == 192);
  CHECK(j["pass"] == true);
}

TEST_CASE("verify-single passes for every guarded dimension") {
  for (int n = 2; n <= 5; ++n) {
    const RunResult r = run_cli("verify-single " + std::to_string(n) + " --json");
    INFO(r.output);
    CHECK(r.exit_code == 0);
  }
}

TEST_CASE("verify-multi passes on a small composite system") {
  const RunResult r = run_cli("verify-multi 2 2 --json");
  INFO(r.output);
  REQUIRE(r.exit_code == 0);
  const auto j = parse(r.output);
  CHECK(j["results"]["sp_closure_count"] == 720);
  CHECK(j["results"]["sp_enumerated_count"] == 720);
}

TEST_CASE("sim run prints the tableau of the bundled example") {
  const RunResult r = run_cli("sim run " + example_circuit() + " --json");
  REQUIRE(r.exit_code == 0);
  const auto j = parse(r.output);
  const auto expected = nlohmann::json::parse(
      R"([[0,1,0,0],[1,0,1,0],[0,0,1,0],[0,1,1,1]])");
  CHECK(j["results"]["tableau"]["matrix"] == expected);
}

TEST_CASE("sim verify matches the oracle on the bundled example") {
  const RunResult r = run_cli("sim verify " + example_circuit() + " --json");
  INFO(r.output);
  CHECK(r.exit_code == 0);
}

TEST_CASE("sim run rejects malformed circuits with exit 2") {
  const std::string bad = std::string(CLIFFSYM_CIRCUIT_DIR) + "/../build/bad_circuit.json";
  {
    std::ofstream out(bad);
    out << "{ not json";
  }
  const RunResult r = run_cli("sim run " + bad);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("parse error") != std::string::npos);
  std::remove(bad.c_str());

  CHECK(run_cli("sim run /nonexistent/circuit.json").exit_code == 2);
}

TEST_CASE("sim verify refuses oversized systems with exit 2") {
  const std::string path = std::string(CLIFFSYM_CIRCUIT_DIR) + "/../build/big_circuit.json";
  {
    std::ofstream out(path);
    out << R"({"dims": [7, 7], "gates": []})";
  }
  const RunResult r = run_cli("sim verify " + path);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("dense guard") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("sim bench prints a deterministic tableau hash") {
  const RunResult a = run_cli("sim bench --dims 3x10 --gates 500 --seed 7 --json");
  REQUIRE(a.exit_code == 0);
  const RunResult b = run_cli("sim bench --dims 3x10 --gates 500 --seed 7 --json");
  REQUIRE(b.exit_code == 0);
  CHECK(parse(a.output)["results"]["tableau_hash"] ==
        parse(b.output)["results"]["tableau_hash"]);
}

TEST_CASE("QC_TOL loosens the tolerance without breaking the checks") {
  const std::string cmd = std::string("QC_TOL=1e-7 ") + CLIFFSYM_CLI_PATH + " verify-single 2 --json";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
}
