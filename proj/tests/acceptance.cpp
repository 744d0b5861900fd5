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

// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every expected value and tolerance is pinned here.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cliffsym/dense.hpp"
#include "cliffsym/multipartite.hpp"
#include "cliffsym/numtheory.hpp"
#include "cliffsym/stabsim.hpp"
#include "cliffsym/verify.hpp"

using namespace cliffsym;
using cx = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

// criterion 1: the cardinality table, by formula and exhaustive enumeration
bool cardinality_table(std::string& why) {
  const std::int64_t expected[7][3] = {{4, 6, 24},     {9, 24, 216},    {16, 48, 768},
                                       {25, 120, 3000}, {36, 144, 5184}, {49, 336, 16464},
                                       {64, 384, 24576}};
  for (std::int64_t n = 2; n <= 8; ++n) {
    const auto& row = expected[n - 2];
    const std::int64_t formula = sl2_order(n);
    const std::int64_t enumerated = static_cast<std::int64_t>(sl2_enumerate(n).size());
    if (n * n != row[0] || formula != row[1] || enumerated != row[1] ||
        n * n * formula != row[2]) {
      why = "row N=" + std::to_string(n) + " mismatch";
      return false;
    }
  }
  return true;
}

// criterion 2: Weyl-Heisenberg orders, abstract and by distinct dense images
bool weyl_heisenberg_orders(std::string& why) {
  if (wh_group_order(wh_context(2)) != 16) {
    why = "|H(2)| != 16";
    return false;
  }
  for (std::int64_t n = 2; n <= 6; ++n) {
    const WHContext ctx = wh_context(n);
    const std::int64_t expected = n % 2 == 0 ? 2 * n * n * n : n * n * n;
    if (wh_group_order(ctx) != expected ||
        wh_enumerate(ctx).size() != static_cast<std::size_t>(expected)) {
      why = "abstract order mismatch at N=" + std::to_string(n);
      return false;
    }
    if (!wh_dense_faithful(ctx)) {  // pairwise distinct within 1e-9*N
      why = "dense images not faithful at N=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

// criterion 3: the 192-element finite Clifford group at N = 2
bool finite_clifford_n2(std::string& why) {
  const auto closure = finite_closure({build_S(2), build_D(2)});
  if (closure.size() != 192) {
    why = "closure size " + std::to_string(closure.size());
    return false;
  }
  const double tol = 1e-9;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
  const cx eta = std::polar(1.0, kPi / 4.0);
  bool has_eta = false;
  for (const auto& e : closure) has_eta = has_eta || approx_equal(e.mat, eta * id, tol);
  if (!has_eta) {
    why = "e^{i pi/4} I not in closure";
    return false;
  }
  const Eigen::MatrixXcd sd = build_S(2).mat * build_D(2).mat;
  const Eigen::MatrixXcd cube = sd * sd * sd;
  // (S_2 D_2)^3 is the order-8 scalar eta^7 = e^{-i pi/4}
  if (!approx_equal(cube, std::conj(eta) * id, tol)) {
    why = "(S D)^3 is not the order-8 scalar";
    return false;
  }
  bool has_cube = false;
  for (const auto& e : closure) has_cube = has_cube || approx_equal(e.mat, cube, tol);
  if (!has_cube) {
    why = "(S D)^3 not in closure";
    return false;
  }
  return true;
}

// criterion 4: {phi(S), phi(D)}^{+-1} generate SL(2,Z_N), N in 2..8
bool sl2_generation(std::string& why) {
  for (std::int64_t n = 2; n <= 8; ++n) {
    if (sl2_generated_count(n) != static_cast<std::size_t>(sl2_order(n))) {
      why = "BFS count mismatch at N=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

// criterion 5: multipartite orders
bool multipartite_orders(std::string& why) {
  if (sp_enumerate(dim_list({2, 2})).size() != 720) {
    why = "sp_enumerate([2,2]) != 720";
    return false;
  }
  if (sp_closure(dim_list({3, 3})) != 51840) {
    why = "sp_closure([3,3]) != 51840";
    return false;
  }
  if (sp_enumerate(dim_list({2, 3})).size() != 144) {
    why = "sp_enumerate([2,3]) != 144";
    return false;
  }
  if (sp_closure(dim_list({2, 2})) != 720) {
    why = "sp_closure([2,2]) != 720";
    return false;
  }
  return true;
}

// criterion 6: elementary-divisor decompositions, verbatim
bool decompositions(std::string& why) {
  const std::string a = factors_display(decompose_symmetry(dim_list({15, 12})));
  if (a != "SL(2,Z_4) x Sp(4,Z_3) x SL(2,Z_5)") {
    why = "got " + a;
    return false;
  }
  const std::string b = factors_display(decompose_symmetry(dim_list({180, 150})));
  if (b != "Sp_[2,4] x Sp_[3,9] x Sp_[5,25]") {
    why = "got " + b;
    return false;
  }
  return true;
}

// criterion 7: every generator conjugates every Weyl-Heisenberg generator
// back into the tensor group, up to phase (tolerance 1e-9*N)
bool generator_conjugation(std::string& why) {
  for (const auto& raw :
       {std::vector<std::int64_t>{2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
    const GeneratorCheckReport report = verify_generator_conjugation(dim_list(raw));
    for (const auto& check : report.checks) {
      if (!check.pass) {
        why = check.name;
        return false;
      }
    }
  }
  return true;
}

// criterion 8: simulator vs dense oracle, 100 random circuits x 50 gates
bool simulator_oracle(std::string& why) {
  const std::vector<std::vector<std::int64_t>> dim_sets = {
      {2, 2}, {2, 3}, {3, 3}, {2, 4}, {2, 3, 4}};
  std::uint64_t seed = 1000;
  for (const auto& raw : dim_sets) {
    const DimList dims = dim_list(raw);
    for (int rep = 0; rep < 20; ++rep) {
      const Circuit c = random_circuit(dims, 50, seed++);
      const VerifyReport report = verify_vs_dense(c);
      if (!report.match) {
        why = report.detail;
        return false;
      }
    }
  }
  return true;
}

// criterion 9: the per-module property suites
bool property_suites(std::string& why) {
  for (std::int64_t n = 2; n <= 8; ++n) {
    if (!wh_group_axioms_hold(wh_context(n), 42)) {
      why = "group axioms at N=" + std::to_string(n);
      return false;
    }
    if (!sl2_act_preserves_form(n, 42)) {
      why = "symplectic preservation at N=" + std::to_string(n);
      return false;
    }
  }
  for (std::int64_t n = 2; n <= 6; ++n) {
    if (!phi_homomorphism_holds(n, 42)) {
      why = "phi homomorphism at N=" + std::to_string(n);
      return false;
    }
  }
  for (const auto& raw : {std::vector<std::int64_t>{2, 4}, {4, 6}, {2, 3, 4}}) {
    const DimList dims = dim_list(raw);
    if (!block_monoid_closed(dims, 42)) {
      why = "block monoid closure";
      return false;
    }
    if (!cross_modulus_lift_invariant(dims, 42)) {
      why = "cross-modulus well-definedness";
      return false;
    }
  }
  return true;
}

// criterion 10: 50-factor qutrit circuit of 10^4 gates in under a second
bool simulator_performance(std::string& why) {
  const BenchReport report = benchmark(dim_list(std::vector<std::int64_t>(50, 3)), 10000, 7);
  if (report.seconds >= 1.0) {
    why = "took " + std::to_string(report.seconds) + " s";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"cardinality table N=2..8 (formula + enumeration, exact)", 10.0, cardinality_table},
      {"Weyl-Heisenberg orders N<=6 (abstract + dense images, tol 1e-9*N)", 30.0,
       weyl_heisenberg_orders},
      {"N=2 finite Clifford closure: 192 elements, order-8 scalar (tol 1e-9)", 5.0,
       finite_clifford_n2},
      {"SL(2,Z_N) generated by phi(S), phi(D) for N=2..8 (exact)", 30.0, sl2_generation},
      {"multipartite orders: Sp_[2,2]=720, Sp_[3,3]=51840, Sp_[2,3]=144", 120.0,
       multipartite_orders},
      {"decompositions of [15,12] and [180,150], verbatim", 1.0, decompositions},
      {"generator conjugation closes in the tensor group (tol 1e-9*N)", 60.0,
       generator_conjugation},
      {"simulator equals dense extraction on 100 random circuits (exact)", 120.0,
       simulator_oracle},
      {"property suites: axioms, homomorphisms, form, monoid, lifts", 120.0, property_suites},
      {"50-qutrit circuit, 10^4 gates, under 1 s", 10.0, simulator_performance},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = criteria[i].run(why);
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > criteria[i].budget_seconds) {
      ok = false;
      why = "over time budget";
    }
    std::printf("[%s] %2zu %s (%.2fs, budget %.0fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), elapsed, criteria[i].budget_seconds,
                ok || why.empty() ? "" : " -- ", ok ? "" : why.c_str());
    if (!ok) ++failures;
  }
  if (failures) {
    std::printf("%d of %zu acceptance criteria FAILED\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return 0;
}
