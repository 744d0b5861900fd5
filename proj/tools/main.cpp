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

#include <CLI11.hpp>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cliffsym/dense.hpp"
#include "cliffsym/multipartite.hpp"
#include "cliffsym/numtheory.hpp"
#include "cliffsym/report.hpp"
#include "cliffsym/stabsim.hpp"
#include "cliffsym/verify.hpp"

namespace {

using cliffsym::Report;
using json = nlohmann::ordered_json;

constexpr std::size_t kDefaultDenseClosureGuard = 10000;
constexpr std::size_t kDefaultBlockClosureGuard = 1000000;
constexpr std::uint64_t kDefaultEnumGuard = std::uint64_t{1} << 24;

int emit(const Report& report, bool as_json) {
  if (as_json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.render_text();
  return report.all_pass() ? 0 : 1;
}

std::string hash_hex(std::uint64_t h) {
  std::ostringstream out;
  out << "0x" << std::hex << h;
  return out.str();
}

Report cmd_orders(std::int64_t max_n) {
  if (max_n < 2 || max_n > 12)
    throw std::invalid_argument("orders: --max must be within 2..12");
  Report report;
  report.command = "orders";
  report.inputs["max"] = max_n;
  json rows = json::array();
  for (std::int64_t n = 2; n <= max_n; ++n) {
    const std::int64_t formula = cliffsym::sl2_order(n);
    const std::int64_t enumerated = static_cast<std::int64_t>(cliffsym::sl2_enumerate(n).size());
    json row;
    row["n"] = n;
    row["phase_space"] = n * n;
    row["sl2_formula"] = formula;
    row["sl2_enumerated"] = enumerated;
    row["clifford_quotient"] = n * n * formula;
    rows.push_back(std::move(row));
    report.add_check("N=" + std::to_string(n) + ": enumeration matches the order formula", formula,
                     enumerated);
  }
  report.results["rows"] = std::move(rows);
  return report;
}

Report cmd_verify_single(std::int64_t n, std::uint64_t seed, std::size_t closure_guard) {
  if (n < 2 || n > 8) throw std::invalid_argument("verify-single: N must be within 2..8");
  Report report;
  report.command = "verify-single";
  report.inputs["n"] = n;
  report.inputs["seed"] = seed;

  const cliffsym::WHContext ctx = cliffsym::wh_context(n);
  report.add_check("Weyl-Heisenberg enumeration count equals N^3 (odd) / 2N^3 (even)",
                   cliffsym::wh_group_order(ctx),
                   static_cast<std::int64_t>(cliffsym::wh_enumerate(ctx).size()));
  report.add_check("group axioms (associativity, identity, inverses)", true,
                   cliffsym::wh_group_axioms_hold(ctx, seed));
  report.add_check("center equals the tau-power subgroup (brute-force commutation)", true,
                   cliffsym::wh_center_matches_formula(ctx));
  if (n <= 6) {
    report.add_check("dense images pairwise distinct, count = group order", true,
                     cliffsym::wh_dense_faithful(ctx));
  }
  report.add_check("S Q S^-1 = P^-1, S P S^-1 = Q, D Q D^-1 = Q, D P D^-1 = alpha Q P", true,
                   cliffsym::generator_relations_hold(n));
  report.add_check("phi(S) = [[0,1],[-1,0]] and phi(D) = [[1,1],[0,1]]", true,
                   cliffsym::phi_generator_images_match(n));
  report.add_check("phi is a homomorphism on random words over {S, D, Q, P}", true,
                   cliffsym::phi_homomorphism_holds(n, seed));
  report.add_check("phi ignores global phases", true, cliffsym::phi_phase_invariant(n, seed));
  report.add_check("SL(2,Z_N) enumeration count equals the order formula", cliffsym::sl2_order(n),
                   static_cast<std::int64_t>(cliffsym::sl2_enumerate(n).size()));
  report.add_check("SL(2,Z_N) action preserves the symplectic form", true,
                   cliffsym::sl2_act_preserves_form(n, seed));
  report.add_check("BFS over {S, D}^(+-1) reaches the whole group",
                   cliffsym::sl2_order(n),
                   static_cast<std::int64_t>(cliffsym::sl2_generated_count(n)));

  if (n == 2 || n == 3) {
    try {
      const auto closure =
          cliffsym::finite_closure({cliffsym::build_S(n), cliffsym::build_D(n)}, closure_guard);
      report.results["finite_closure_size"] = closure.size();
      const cliffsym::DenseUnitary q = cliffsym::pauli_q(n), p = cliffsym::pauli_p(n);
      bool has_q = false, has_p = false;
      for (const auto& e : closure) {
        has_q = has_q || cliffsym::equal_up_to_phase(e, q).matched;
        has_p = has_p || cliffsym::equal_up_to_phase(e, p).matched;
      }
      report.add_check("Q and P lie in closure(S, D) up to phase", true, has_q && has_p);
      if (n == 2) {
        report.add_check("closure(S_2, D_2) has 192 elements", 192,
                         static_cast<std::int64_t>(closure.size()));
        const cliffsym::DenseUnitary s = cliffsym::build_S(2), d = cliffsym::build_D(2);
        const Eigen::MatrixXcd sd = s.mat * d.mat;
        const Eigen::MatrixXcd cube = sd * sd * sd;
        const std::complex<double> eta = std::polar(1.0, 3.14159265358979323846 / 4.0);
        const Eigen::MatrixXcd id2 = Eigen::MatrixXcd::Identity(2, 2);
        // the cube is the order-8 scalar eta^7 = e^{-i pi/4}
        report.add_check("(S_2 D_2)^3 is a scalar of order 8 (e^{-i pi/4} I)", true,
                         cliffsym::approx_equal(cube, std::conj(eta) * id2, cliffsym::default_tol(2)));
        bool has_eta = false;
        for (const auto& e : closure)
          has_eta = has_eta || cliffsym::approx_equal(e.mat, eta * id2, e.tol);
        report.add_check("closure contains e^{i pi/4} I", true, has_eta);
      }
    } catch (const cliffsym::GuardExceededError& e) {
      report.results["finite_closure_size"] = nullptr;
      report.results["finite_closure_note"] = e.what();
      report.add_check("finite closure of {S, D} stays within guard", true, false);
    }
  }
  return report;
}

Report cmd_verify_multi(const std::vector<std::int64_t>& dims_in, std::uint64_t seed,
                        std::size_t closure_guard, std::uint64_t enum_guard) {
  const cliffsym::DimList dims = cliffsym::dim_list(dims_in);
  if (dims.total_dim() > cliffsym::kDenseOracleGuard)
    throw std::invalid_argument("verify-multi: total dimension exceeds the dense guard of " +
                                std::to_string(cliffsym::kDenseOracleGuard));
  Report report;
  report.command = "verify-multi";
  report.inputs["dims"] = dims.dims;
  report.inputs["seed"] = seed;

  const cliffsym::GeneratorCheckReport gen_checks = cliffsym::verify_generator_conjugation(dims);
  for (const auto& check : gen_checks.checks) report.add_check(check.name, true, check.pass);

  report.add_check("block extraction is a homomorphism on random generator words", true,
                   cliffsym::extract_homomorphism_holds(dims, seed));
  report.add_check("block monoid closed under multiplication (random samples)", true,
                   cliffsym::block_monoid_closed(dims, seed));
  report.add_check("cross-modulus products independent of integer lifts", true,
                   cliffsym::cross_modulus_lift_invariant(dims, seed));

  const std::size_t closure = cliffsym::sp_closure(dims, closure_guard);
  report.results["sp_closure_count"] = closure;
  if (cliffsym::sp_enumeration_space(dims) <= enum_guard) {
    const auto enumerated = cliffsym::sp_enumerate(dims, enum_guard);
    report.results["sp_enumerated_count"] = enumerated.size();
    report.add_check("generator closure count equals exhaustive enumeration",
                     static_cast<std::int64_t>(enumerated.size()),
                     static_cast<std::int64_t>(closure));
  }

  const cliffsym::Circuit probe = cliffsym::random_circuit(dims, 30, seed);
  report.add_check("random circuit tableau matches dense extraction", true,
                   cliffsym::verify_vs_dense(probe).match);
  return report;
}

Report cmd_decompose(const std::vector<std::int64_t>& dims_in, std::size_t closure_guard) {
  const cliffsym::DimList dims = cliffsym::dim_list(dims_in);
  Report report;
  report.command = "decompose";
  report.inputs["dims"] = dims.dims;

  const auto factors = cliffsym::decompose_symmetry(dims);
  report.results["display"] = cliffsym::factors_display(factors);
  json fj = json::array();
  std::int64_t mass = 1;
  for (const auto& f : factors) {
    json e;
    switch (f.kind) {
      case cliffsym::SymmetryFactor::Kind::SL2: e["kind"] = "SL2"; break;
      case cliffsym::SymmetryFactor::Kind::Sp2k: e["kind"] = "Sp2k"; break;
      case cliffsym::SymmetryFactor::Kind::SpMixed: e["kind"] = "SpMixed"; break;
    }
    e["prime"] = f.prime;
    e["local_dims"] = f.local_dims;
    e["display"] = f.display();

    // order cross-checks where a closed form exists and the size is desk-scale
    if (f.kind == cliffsym::SymmetryFactor::Kind::SL2) {
      const std::int64_t modulus = f.local_dims.front();
      const std::int64_t expected = cliffsym::sl2_order(modulus);
      e["order"] = expected;
      if (modulus <= 12)
        report.add_check(f.display() + " order: enumeration matches formula", expected,
                         static_cast<std::int64_t>(cliffsym::sl2_enumerate(modulus).size()));
    } else if (f.kind == cliffsym::SymmetryFactor::Kind::Sp2k) {
      const std::int64_t expected = cliffsym::sp2k_order(
          static_cast<std::int64_t>(f.local_dims.size()), f.local_dims.front());
      e["order"] = expected;
      if (expected <= static_cast<std::int64_t>(closure_guard)) {
        const std::size_t closure =
            cliffsym::sp_closure(cliffsym::dim_list(f.local_dims), closure_guard);
        report.add_check(f.display() + " order: generator closure matches formula", expected,
                         static_cast<std::int64_t>(closure));
      }
    } else {
      // no closed form for mixed prime-power blocks; report a computed
      // closure count when a conservative estimate stays within guard
      std::int64_t bound = 1;
      for (std::int64_t local : f.local_dims) bound *= cliffsym::sl2_order(local);
      if (bound <= static_cast<std::int64_t>(closure_guard / 256)) {
        e["order"] = cliffsym::sp_closure(cliffsym::dim_list(f.local_dims), closure_guard);
      } else {
        e["order"] = nullptr;
      }
    }
    for (std::int64_t local : f.local_dims) mass *= local;
    fj.push_back(std::move(e));
  }
  report.results["factors"] = std::move(fj);
  report.add_check("product of factor dimensions equals product of input dimensions",
                   dims.total_dim(), mass);
  return report;
}

Report cmd_lift(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  // sl2_mat rejects nonunit determinants
  const cliffsym::SL2Mat m = cliffsym::sl2_mat(n, a, b, c, d);
  Report report;
  report.command = "lift";
  report.inputs["n"] = n;
  report.inputs["matrix"] = {{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}};

  const cliffsym::GeneratorWord word = cliffsym::lift_sl2(m);
  json letters = json::array();
  for (cliffsym::Letter l : word.letters) {
    switch (l) {
      case cliffsym::Letter::S: letters.push_back("S"); break;
      case cliffsym::Letter::SInv: letters.push_back("S^-1"); break;
      case cliffsym::Letter::D: letters.push_back("D"); break;
      case cliffsym::Letter::DInv: letters.push_back("D^-1"); break;
    }
  }
  report.results["word"] = std::move(letters);
  report.results["word_display"] = cliffsym::word_to_string(word);
  report.results["length"] = word.letters.size();
  report.add_check("word evaluates to the input matrix", true,
                   cliffsym::eval_word(word, n) == m);
  return report;
}

Report cmd_closure(std::int64_t n, std::size_t closure_guard) {
  if (n < 2) throw std::invalid_argument("closure: N must be >= 2");
  Report report;
  report.command = "closure";
  report.inputs["n"] = n;
  const auto closure =
      cliffsym::finite_closure({cliffsym::build_S(n), cliffsym::build_D(n)}, closure_guard);
  report.results["size"] = closure.size();

  bool has_id = false;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  for (const auto& e : closure) has_id = has_id || cliffsym::approx_equal(e.mat, id, e.tol);
  report.add_check("closure contains the identity", true, has_id);
  if (n == 2)
    report.add_check("closure(S_2, D_2) has 192 elements", 192,
                     static_cast<std::int64_t>(closure.size()));
  if (n % 2 == 1) {
    const cliffsym::DenseUnitary q = cliffsym::pauli_q(n), p = cliffsym::pauli_p(n);
    bool has_q = false, has_p = false;
    for (const auto& e : closure) {
      has_q = has_q || cliffsym::equal_up_to_phase(e, q).matched;
      has_p = has_p || cliffsym::equal_up_to_phase(e, p).matched;
    }
    report.add_check("Q and P lie in the closure up to phase (odd N)", true, has_q && has_p);
  }
  return report;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open circuit file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Report cmd_sim_run(const std::string& path) {
  const cliffsym::Circuit c = cliffsym::circuit_from_json_text(read_file(path));
  Report report;
  report.command = "sim run";
  report.inputs["circuit"] = path;
  report.inputs["dims"] = c.dims.dims;
  report.inputs["gate_count"] = c.gates.size();
  const cliffsym::Tableau t = cliffsym::simulate(c);
  report.results["tableau"] = cliffsym::tableau_to_json(t);
  report.results["tableau_hash"] = hash_hex(cliffsym::tableau_hash(t));
  report.add_check("tableau is symplectic", true, cliffsym::is_symplectic(t.matrix));
  return report;
}

Report cmd_sim_verify(const std::string& path) {
  const cliffsym::Circuit c = cliffsym::circuit_from_json_text(read_file(path));
  if (c.dims.total_dim() > cliffsym::kDenseOracleGuard)
    throw std::invalid_argument("sim verify: total dimension " + std::to_string(c.dims.total_dim()) +
                                " exceeds the dense guard of " +
                                std::to_string(cliffsym::kDenseOracleGuard));
  Report report;
  report.command = "sim verify";
  report.inputs["circuit"] = path;
  report.inputs["dims"] = c.dims.dims;
  report.inputs["gate_count"] = c.gates.size();
  const cliffsym::VerifyReport v = cliffsym::verify_vs_dense(c);
  report.results["detail"] = v.detail;
  report.add_check("tableau matches the dense-oracle extraction", true, v.match);
  return report;
}

std::vector<std::int64_t> parse_dims_spec(const std::string& spec) {
  std::vector<std::int64_t> dims;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    const auto x = token.find('x');
    if (x == std::string::npos) {
      dims.push_back(std::stoll(token));
    } else {
      const std::int64_t n = std::stoll(token.substr(0, x));
      const std::int64_t count = std::stoll(token.substr(x + 1));
      if (count < 1) throw std::invalid_argument("bad dims spec: repeat count must be >= 1");
      for (std::int64_t r = 0; r < count; ++r) dims.push_back(n);
    }
  }
  if (dims.empty()) throw std::invalid_argument("bad dims spec: no dimensions given");
  return dims;
}

Report cmd_sim_bench(const std::string& dims_spec, std::size_t gates, std::uint64_t seed) {
  const cliffsym::DimList dims = cliffsym::dim_list(parse_dims_spec(dims_spec));
  Report report;
  report.command = "sim bench";
  report.inputs["dims"] = dims.dims;
  report.inputs["gates"] = gates;
  report.inputs["seed"] = seed;
  const cliffsym::BenchReport bench = cliffsym::benchmark(dims, gates, seed);
  const cliffsym::BenchReport again = cliffsym::benchmark(dims, gates, seed);
  report.results["seconds"] = bench.seconds;
  report.results["ns_per_gate"] = bench.ns_per_gate;
  report.results["tableau_hash"] = hash_hex(bench.hash);
  report.add_check("same seed reproduces the same tableau", hash_hex(bench.hash),
                   hash_hex(again.hash));
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cliffsym: finite Weyl-Heisenberg and Clifford group engine"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  double tol = -1.0;
  app.add_flag("--json", as_json, "emit the report as deterministic JSON");
  app.add_option("--tol", tol, "per-dimension tolerance scale (effective tolerance = value * N)")
      ->envname("QC_TOL");

  auto* orders = app.add_subcommand("orders", "phase-space / SL(2,Z_N) / Clifford-quotient orders");
  std::int64_t max_n = 8;
  orders->add_option("--max", max_n, "largest N (2..12)")->required();

  auto* vsingle = app.add_subcommand("verify-single", "single-system invariant suite");
  std::int64_t vs_n = 2;
  std::uint64_t seed = 1;
  std::size_t max_closure = 0;
  std::uint64_t max_enum = kDefaultEnumGuard;
  vsingle->add_option("n", vs_n, "system dimension N (2..8)")->required();
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--max-closure", max_closure, "closure size guard (0 = command default)");
  app.add_option("--max-enum", max_enum, "enumeration candidate-space guard");

  auto* vmulti = app.add_subcommand("verify-multi", "composite-system generator and simulator checks");
  std::vector<std::int64_t> vm_dims;
  vmulti->add_option("dims", vm_dims, "factor dimensions n_1 n_2 ...")->required()->expected(-1);

  auto* decompose = app.add_subcommand("decompose", "elementary-divisor symmetry decomposition");
  std::vector<std::int64_t> dc_dims;
  decompose->add_option("dims", dc_dims, "factor dimensions n_1 n_2 ...")->required()->expected(-1);

  auto* lift = app.add_subcommand("lift", "shortest S/D word for a matrix [[A,C],[B,D]] in SL(2,Z_N)");
  std::int64_t ln = 2, la = 1, lb = 0, lc = 0, ld = 1;
  lift->add_option("n", ln, "modulus N")->required();
  lift->add_option("a", la, "entry A (row 1, col 1)")->required();
  lift->add_option("b", lb, "entry B (row 2, col 1)")->required();
  lift->add_option("c", lc, "entry C (row 1, col 2)")->required();
  lift->add_option("d", ld, "entry D (row 2, col 2)")->required();

  auto* closure = app.add_subcommand("closure", "finite closure of the dense generators {S_N, D_N}");
  std::int64_t cn = 2;
  closure->add_option("n", cn, "system dimension N")->required();

  auto* sim = app.add_subcommand("sim", "Heisenberg-picture circuit simulator");
  sim->require_subcommand(1);
  auto* sim_run = sim->add_subcommand("run", "simulate a circuit file and print the tableau");
  auto* sim_verify = sim->add_subcommand("verify", "cross-check a circuit against the dense oracle");
  auto* sim_bench = sim->add_subcommand("bench", "time a random circuit");
  std::string run_file, verify_file, bench_dims;
  std::size_t bench_gates = 10000;
  sim_run->add_option("circuit", run_file, "circuit JSON file")->required();
  sim_verify->add_option("circuit", verify_file, "circuit JSON file")->required();
  sim_bench->add_option("--dims", bench_dims, "dims spec, e.g. 2,3,4 or 3x50")->required();
  sim_bench->add_option("--gates", bench_gates, "number of random gates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  try {
    if (tol > 0.0) cliffsym::set_tol_scale(tol);
    if (*orders) return emit(cmd_orders(max_n), as_json);
    if (*vsingle)
      return emit(cmd_verify_single(vs_n, seed,
                                    max_closure ? max_closure : kDefaultDenseClosureGuard),
                  as_json);
    if (*vmulti)
      return emit(cmd_verify_multi(vm_dims, seed,
                                   max_closure ? max_closure : kDefaultBlockClosureGuard, max_enum),
                  as_json);
    if (*decompose)
      return emit(cmd_decompose(dc_dims, max_closure ? max_closure : kDefaultBlockClosureGuard),
                  as_json);
    if (*lift) return emit(cmd_lift(ln, la, lb, lc, ld), as_json);
    if (*closure)
      return emit(cmd_closure(cn, max_closure ? max_closure : kDefaultDenseClosureGuard), as_json);
    if (*sim_run) return emit(cmd_sim_run(run_file), as_json);
    if (*sim_verify) return emit(cmd_sim_verify(verify_file), as_json);
    if (*sim_bench) return emit(cmd_sim_bench(bench_dims, bench_gates, seed), as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no command selected\n";
  return 2;
}
