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

#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <complex>

#include "cliffsym/dense.hpp"
#include "cliffsym/verify.hpp"
#include "cliffsym/weylheis.hpp"

using namespace cliffsym;

TEST_CASE("context parity picks the phase order") {
  CHECK(wh_context(3).phase_order == 3);
  CHECK(wh_context(4).phase_order == 8);
  CHECK_THROWS_AS(wh_context(1), std::invalid_argument);
}

TEST_CASE("group law worked examples") {
  const WHContext c2 = wh_context(2);
  // Q * P needs no reordering
  CHECK(wh_mul(wh_element(c2, 0, 1, 0), wh_element(c2, 0, 0, 1)) == wh_element(c2, 0, 1, 1));
  // P * Q = tau^2 Q P = omega Q P
  CHECK(wh_mul(wh_element(c2, 0, 0, 1), wh_element(c2, 0, 1, 0)) == wh_element(c2, 2, 1, 1));

  const WHContext c3 = wh_context(3);
  for (const auto& x : wh_enumerate(c3)) {
    CHECK(wh_mul(wh_identity(c3), x) == x);
    CHECK(wh_mul(x, wh_identity(c3)) == x);
  }
}

TEST_CASE("mismatched contexts are rejected") {
  CHECK_THROWS_AS(wh_mul(wh_identity(wh_context(2)), wh_identity(wh_context(3))),
                  std::invalid_argument);
}

TEST_CASE("inverses: worked examples and brute-force oracle") {
  const WHContext c2 = wh_context(2);
  CHECK(wh_inverse(wh_identity(c2)) == wh_identity(c2));
  CHECK(wh_inverse(wh_element(c2, 0, 1, 0)) == wh_element(c2, 0, 1, 0));  // Q_2^2 = I

  // exhaustive inverse search over the 27 elements of H(3)
  const WHContext c3 = wh_context(3);
  const WHElement a = wh_element(c3, 0, 1, 1);
  WHElement found = wh_identity(c3);
  int hits = 0;
  for (const auto& x : wh_enumerate(c3)) {
    if (wh_mul(a, x) == wh_identity(c3) && wh_mul(x, a) == wh_identity(c3)) {
      found = x;
      ++hits;
    }
  }
  REQUIRE(hits == 1);
  CHECK(found == wh_element(c3, 2, 2, 2));
  CHECK(wh_inverse(a) == found);
}

TEST_CASE("group axioms: exhaustive for N <= 4, randomized for N in 5..8") {
  for (std::int64_t n = 2; n <= 8; ++n) REQUIRE(wh_group_axioms_hold(wh_context(n), 7));
}

TEST_CASE("group orders and enumeration agree") {
  CHECK(wh_group_order(wh_context(2)) == 16);
  CHECK(wh_group_order(wh_context(3)) == 27);
  for (std::int64_t n = 2; n <= 6; ++n) {
    const WHContext ctx = wh_context(n);
    const std::int64_t expected = n % 2 == 0 ? 2 * n * n * n : n * n * n;
    CHECK(wh_group_order(ctx) == expected);
    CHECK(wh_enumerate(ctx).size() == static_cast<std::size_t>(expected));
  }
}

TEST_CASE("center is the tau-power subgroup, by brute-force commutation") {
  CHECK(center(wh_context(2)).size() == 4);
  for (std::int64_t n = 2; n <= 6; ++n) REQUIRE(wh_center_matches_formula(wh_context(n)));
}

TEST_CASE("projection drops the phase and is a homomorphism") {
  const WHContext c3 = wh_context(3);
  CHECK(project(wh_element(c3, 5, 1, 2)) == phase_point(3, 1, 2));
  for (const auto& a : wh_enumerate(c3))
    for (const auto& b : wh_enumerate(c3))
      REQUIRE(project(wh_mul(a, b)) == project(a) + project(b));
}

TEST_CASE("projection kernel equals the center") {
  const WHContext c4 = wh_context(4);
  const auto z = center(c4);
  for (const auto& x : wh_enumerate(c4)) {
    const bool in_kernel = project(x) == phase_point(4, 0, 0);
    const bool in_center = std::find(z.begin(), z.end(), x) != z.end();
    REQUIRE(in_kernel == in_center);
  }
}

TEST_CASE("symplectic form: alternating, antisymmetric, non-degenerate") {
  for (std::int64_t i = 0; i < 5; ++i)
    for (std::int64_t j = 0; j < 5; ++j)
      REQUIRE(symplectic_form(phase_point(5, i, j), phase_point(5, i, j)) == 0);

  CHECK(symplectic_form(phase_point(4, 1, 0), phase_point(4, 0, 1)) == 3);

  for (std::int64_t ui = 0; ui < 4; ++ui)
    for (std::int64_t uj = 0; uj < 4; ++uj)
      for (std::int64_t vi = 0; vi < 4; ++vi)
        for (std::int64_t vj = 0; vj < 4; ++vj) {
          const PhasePoint u = phase_point(4, ui, uj), v = phase_point(4, vi, vj);
          REQUIRE(symplectic_form(u, v) == floormod(-symplectic_form(v, u), 4));
        }

  for (std::int64_t n = 2; n <= 8; ++n) {
    for (std::int64_t ui = 0; ui < n; ++ui) {
      for (std::int64_t uj = 0; uj < n; ++uj) {
        if (ui == 0 && uj == 0) continue;
        bool witness = false;
        for (std::int64_t vi = 0; vi < n && !witness; ++vi)
          for (std::int64_t vj = 0; vj < n && !witness; ++vj)
            witness = symplectic_form(phase_point(n, ui, uj), phase_point(n, vi, vj)) != 0;
        REQUIRE(witness);
      }
    }
  }

  CHECK_THROWS_AS(symplectic_form(phase_point(2, 0, 0), phase_point(3, 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("dense realizations of the N=2 generators") {
  const WHContext c2 = wh_context(2);
  Eigen::MatrixXcd sz(2, 2), sx(2, 2);
  sz << 1, 0, 0, -1;
  sx << 0, 1, 1, 0;
  CHECK(approx_equal(to_dense(wh_element(c2, 0, 1, 0)).mat, sz, 1e-12));
  CHECK(approx_equal(to_dense(wh_element(c2, 0, 0, 1)).mat, sx, 1e-12));
  const Eigen::MatrixXcd tau_id = std::complex<double>{0, -1} * Eigen::MatrixXcd::Identity(2, 2);
  CHECK(approx_equal(to_dense(wh_element(c2, 1, 0, 0)).mat, tau_id, 1e-12));
}

TEST_CASE("tau powers behave like a primitive root") {
  for (std::int64_t n = 2; n <= 16; ++n) {
    const std::int64_t order = n % 2 == 0 ? 2 * n : n;
    CHECK(std::abs(tau_power(n, 2) - omega_power(n, 1)) < 1e-12);
    CHECK(std::abs(tau_power(n, order) - std::complex<double>{1.0, 0.0}) < 1e-12);
  }
}

TEST_CASE("to_dense is a faithful homomorphism") {
  for (std::int64_t n = 2; n <= 6; ++n) {
    const WHContext ctx = wh_context(n);
    REQUIRE(to_dense_homomorphism_holds(ctx, 11));
    REQUIRE(wh_dense_faithful(ctx));
  }
}
