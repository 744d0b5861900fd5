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
#include <complex>

#include "cliffsym/dense.hpp"
#include "cliffsym/verify.hpp"

using namespace cliffsym;
using cx = std::complex<double>;

TEST_CASE("non-unitary matrices are rejected") {
  Eigen::MatrixXcd bad(2, 2);
  bad << 1, 1, 0, 1;
  CHECK_THROWS_AS(DenseUnitary(bad), std::invalid_argument);
}

TEST_CASE("equality up to phase") {
  const DenseUnitary u = build_S(3);
  const PhaseMatch same = equal_up_to_phase(u, u);
  REQUIRE(same.matched);
  CHECK(std::abs(same.phase - cx{1, 0}) < 1e-12);

  const DenseUnitary scaled(cx{0, -1} * u.mat);
  const PhaseMatch pulled = equal_up_to_phase(scaled, u);
  REQUIRE(pulled.matched);
  CHECK(std::abs(pulled.phase - cx{0, -1}) < 1e-12);

  CHECK_FALSE(equal_up_to_phase(pauli_q(2), pauli_p(2)).matched);
  CHECK_THROWS_AS(equal_up_to_phase(pauli_q(2), pauli_q(3)), std::invalid_argument);
}

TEST_CASE("ad_action worked examples") {
  const DenseUnitary a = build_D(3);
  CHECK(approx_equal(ad_action(identity_unitary(3), a).mat, a.mat, 1e-12));

  // S_2 sigma_z S_2^-1 = sigma_x
  CHECK(approx_equal(ad_action(build_S(2), pauli_q(2)).mat, pauli_p(2).mat, 1e-12));

  // D_2 sigma_x D_2^-1 = tau^3 Q P = [[0, i], [-i, 0]], computed directly
  Eigen::MatrixXcd expected(2, 2);
  expected << cx{0, 0}, cx{0, 1}, cx{0, -1}, cx{0, 0};
  CHECK(approx_equal(ad_action(build_D(2), pauli_p(2)).mat, expected, 1e-12));
  const cx alpha = tau_power(2, 3);
  CHECK(approx_equal(ad_action(build_D(2), pauli_p(2)).mat,
                     alpha * (pauli_q(2).mat * pauli_p(2).mat), 1e-12));
}

TEST_CASE("coset extraction recognizes monomials and rejects the Hadamard") {
  CHECK(extract_wh_coset(pauli_q(4), wh_context(4)) == phase_point(4, 1, 0));

  const WHContext c3 = wh_context(3);
  const DenseUnitary p3 = pauli_p(3);
  const DenseUnitary scaled(omega_power(3, 1) * (p3.mat * p3.mat));
  CHECK(extract_wh_coset(scaled, c3) == phase_point(3, 0, 2));

  CHECK_THROWS_AS(extract_wh_coset(build_S(2), wh_context(2)), NotInGroupError);
}

TEST_CASE("phi_of maps the generators to the expected matrices") {
  for (std::int64_t n = 2; n <= 6; ++n) {
    const WHContext ctx = wh_context(n);
    CHECK(phi_of(pauli_q(n), ctx) == sl2_identity(n));
    CHECK(phi_of(build_S(n), ctx) == phi_S(n));
    CHECK(phi_of(build_D(n), ctx) == phi_D(n));
  }
}

TEST_CASE("phi_of is a phase-blind homomorphism") {
  for (std::int64_t n = 2; n <= 6; ++n) {
    REQUIRE(phi_homomorphism_holds(n, 23));
    REQUIRE(phi_phase_invariant(n, 23));
  }
}

TEST_CASE("S and D satisfy the conjugation relations through N = 8") {
  for (std::int64_t n = 2; n <= 8; ++n) REQUIRE(generator_relations_hold(n));
}

TEST_CASE("finite closure of the trivial generator set") {
  const auto closure = finite_closure({identity_unitary(3)});
  REQUIRE(closure.size() == 1);
  CHECK(approx_equal(closure.front().mat, Eigen::MatrixXcd::Identity(3, 3), 1e-12));
}

TEST_CASE("closure guard fails loudly") {
  CHECK_THROWS_AS(finite_closure({build_S(2), build_D(2)}, 10), GuardExceededError);
}

TEST_CASE("N=2 closure reproduces the 192-element finite Clifford group") {
  const auto closure = finite_closure({build_S(2), build_D(2)});
  REQUIRE(closure.size() == 192);

  // every element is eta^nu times one of the 24 parametrized shapes:
  // diag(1, a), antidiag(1, a), or (1/sqrt2) [[1, b], [a, -ab]]
  const double tol = default_tol(2);
  const cx eta = std::polar(1.0, 3.14159265358979323846 / 4.0);
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<Eigen::MatrixXcd> shapes;
  for (int pa = 0; pa < 4; ++pa) {
    const cx a = std::polar(1.0, pa * 3.14159265358979323846 / 2.0);
    Eigen::MatrixXcd diag(2, 2), anti(2, 2);
    diag << 1, 0, 0, a;
    anti << 0, 1, a, 0;
    shapes.push_back(diag);
    shapes.push_back(anti);
    for (int pb = 0; pb < 4; ++pb) {
      const cx b = std::polar(1.0, pb * 3.14159265358979323846 / 2.0);
      Eigen::MatrixXcd f(2, 2);
      f << s, s * b, s * a, -s * a * b;
      shapes.push_back(f);
    }
  }
  REQUIRE(shapes.size() == 24);
  for (const auto& e : closure) {
    bool classified = false;
    for (int nu = 0; nu < 8 && !classified; ++nu) {
      const cx scale = std::pow(eta, nu);
      for (const auto& shape : shapes) {
        if (approx_equal(e.mat, scale * shape, tol)) {
          classified = true;
          break;
        }
      }
    }
    REQUIRE(classified);
  }

  // sigma_z and sigma_x are themselves members
  bool has_q = false, has_p = false;
  for (const auto& e : closure) {
    has_q = has_q || approx_equal(e.mat, pauli_q(2).mat, tol);
    has_p = has_p || approx_equal(e.mat, pauli_p(2).mat, tol);
  }
  CHECK(has_q);
  CHECK(has_p);
}

TEST_CASE("N=3: Q and P lie in closure(S, D) up to phase") {
  const auto closure = finite_closure({build_S(3), build_D(3)});
  const DenseUnitary q = pauli_q(3), p = pauli_p(3);
  bool has_q = false, has_p = false;
  for (const auto& e : closure) {
    has_q = has_q || equal_up_to_phase(e, q).matched;
    has_p = has_p || equal_up_to_phase(e, p).matched;
  }
  CHECK(has_q);
  CHECK(has_p);
}
