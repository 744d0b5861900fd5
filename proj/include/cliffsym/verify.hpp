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

#include "cliffsym/multipartite.hpp"

namespace cliffsym {

// Invariant checkers shared by the command-line verification commands, the
// acceptance suite and the tests. Exhaustive where the group is small,
// seeded random sampling otherwise.

/// Associativity, identity and inverse laws of H(N): exhaustive for N <= 4,
/// `samples` random triples otherwise.
bool wh_group_axioms_hold(const WHContext& ctx, std::uint64_t seed = 1, std::size_t samples = 10000);

/// center(ctx) equals the set {tau^l : l} found by formula (i = j = 0).
bool wh_center_matches_formula(const WHContext& ctx);

/// All dense images are pairwise distinct and their count equals the group
/// order.
bool wh_dense_faithful(const WHContext& ctx);

/// to_dense(a b) = to_dense(a) to_dense(b) on random pairs.
bool to_dense_homomorphism_holds(const WHContext& ctx, std::uint64_t seed = 1,
                                 std::size_t pairs = 1000);

/// S Q S^-1 = P^-1, S P S^-1 = Q, D Q D^-1 = Q, D P D^-1 = alpha Q P.
bool generator_relations_hold(std::int64_t n);

/// phi_of(S) = [[0,1],[-1,0]] and phi_of(D) = [[1,1],[0,1]].
bool phi_generator_images_match(std::int64_t n);

/// phi_of(XY) = phi_of(X) phi_of(Y) on random words over {S, D, Q, P}.
bool phi_homomorphism_holds(std::int64_t n, std::uint64_t seed = 1, std::size_t word_count = 20);

/// phi_of(exp(i alpha) X) = phi_of(X) for random phases.
bool phi_phase_invariant(std::int64_t n, std::uint64_t seed = 1, std::size_t samples = 10);

/// q(Mu, Mv) = q(u, v): exhaustive over SL(2,Z_n) x points for n <= 4,
/// random samples otherwise.
bool sl2_act_preserves_form(std::int64_t n, std::uint64_t seed = 1, std::size_t samples = 2000);

/// Entry (r, c) of h is divisible by the required divisor; true for every
/// product of valid block matrices.
bool block_divisibility_ok(const BlockMatrix& h);

/// Uniformly random monoid element (valid digits in every cell).
BlockMatrix random_block_matrix(const DimList& dims, std::uint64_t seed);

/// block_mul preserves the divisibility invariant on random pairs.
bool block_monoid_closed(const DimList& dims, std::uint64_t seed = 1, std::size_t samples = 200);

/// Replacing entries of either factor by other integer lifts (adding
/// multiples of their row moduli) leaves the product unchanged.
bool cross_modulus_lift_invariant(const DimList& dims, std::uint64_t seed = 1,
                                  std::size_t samples = 200);

/// extract_block_matrix maps dense products to block products on random
/// generator words; total dimension <= kDenseOracleGuard.
bool extract_homomorphism_holds(const DimList& dims, std::uint64_t seed = 1,
                                std::size_t words = 25);

}  // namespace cliffsym
