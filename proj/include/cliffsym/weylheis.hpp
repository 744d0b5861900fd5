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

#include <cstdint>
#include <vector>

namespace cliffsym {

/// Parameters of the finite Weyl-Heisenberg group H(N). Elements are the
/// normal forms tau^l Q^i P^j with tau = -exp(i*pi/N), so tau^2 = omega.
/// The phase exponent l runs mod L = N (N odd) or 2N (N even); tau generates
/// the same cyclic phase group as omega when N is odd.
struct WHContext {
  std::int64_t dim = 0;          // N
  std::int64_t phase_order = 0;  // L
};

WHContext wh_context(std::int64_t n);

bool operator==(const WHContext& a, const WHContext& b);

/// Abstract group element tau^l Q^i P^j, exponents reduced.
struct WHElement {
  WHContext ctx;
  std::int64_t l = 0, i = 0, j = 0;
};

/// Coset label (i, j) of Q^i P^j in the quotient phase space Z_N x Z_N.
struct PhasePoint {
  std::int64_t dim = 0;
  std::int64_t i = 0, j = 0;
};

WHElement wh_element(const WHContext& ctx, std::int64_t l, std::int64_t i, std::int64_t j);
WHElement wh_identity(const WHContext& ctx);
bool operator==(const WHElement& a, const WHElement& b);

// Group law: the reordering P^j Q^i' = omega^(j i') Q^i' P^j contributes
// 2 j_a i_b to the tau exponent.
WHElement wh_mul(const WHElement& a, const WHElement& b);
WHElement wh_inverse(const WHElement& a);

std::int64_t wh_group_order(const WHContext& ctx);
std::vector<WHElement> wh_enumerate(const WHContext& ctx);

/// Elements commuting with every element of H(N), found by brute-force
/// commutation over the full group.
std::vector<WHElement> center(const WHContext& ctx);

PhasePoint phase_point(std::int64_t dim, std::int64_t i, std::int64_t j);
bool operator==(const PhasePoint& a, const PhasePoint& b);
PhasePoint operator+(const PhasePoint& a, const PhasePoint& b);

/// Projection onto the phase space; a homomorphism with kernel the center.
PhasePoint project(const WHElement& a);

/// Symplectic form q((i,j),(i',j')) = i'j - ij' in Z_N.
std::int64_t symplectic_form(const PhasePoint& u, const PhasePoint& v);

}  // namespace cliffsym
