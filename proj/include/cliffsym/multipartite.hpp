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
#include <string>
#include <vector>

#include "cliffsym/dense.hpp"
#include "cliffsym/numtheory.hpp"

namespace cliffsym {

/// Dense cross-checks (extraction oracle, conjugation verification) are
/// limited to this total dimension.
inline constexpr std::int64_t kDenseOracleGuard = 36;

/// Factor dimensions n_1, ..., n_k of a composite system, each >= 2.
struct DimList {
  std::vector<std::int64_t> dims;

  std::size_t factors() const { return dims.size(); }
  /// Product of the dims, saturating at INT64_MAX.
  std::int64_t total_dim() const;
};

DimList dim_list(std::vector<std::int64_t> dims);
bool operator==(const DimList& a, const DimList& b);

/// k x k array of 2x2 integer blocks acting on phase-space coordinates
/// ordered (P_1, Q_1, ..., P_k, Q_k). Block (i, j) entries live mod n_i and
/// are divisible by n_i / gcd(n_i, n_j); entries are stored reduced.
struct BlockMatrix {
  DimList dims;
  std::vector<std::int64_t> m;  // (2k)^2 entries, row-major

  std::int64_t size() const { return 2 * static_cast<std::int64_t>(dims.factors()); }
  std::int64_t& at(std::int64_t r, std::int64_t c) { return m[r * size() + c]; }
  std::int64_t at(std::int64_t r, std::int64_t c) const { return m[r * size() + c]; }
  std::int64_t row_modulus(std::int64_t r) const { return dims.dims[r / 2]; }
};

/// Divisibility constraint on entry (r, c): n_i / gcd(n_i, n_j) for the
/// row block i = r/2 and column block j = c/2.
std::int64_t required_divisor(const DimList& dims, std::int64_t r, std::int64_t c);

/// Validates the divisibility invariant and reduces entries.
BlockMatrix block_matrix(const DimList& dims, std::vector<std::int64_t> entries);
BlockMatrix block_identity(const DimList& dims);
/// J = diag(J_2, ..., J_2) with J_2 = [[0, 1], [-1, 0]].
BlockMatrix block_j(const DimList& dims);
bool operator==(const BlockMatrix& a, const BlockMatrix& b);

/// (HG)_{ij} = sum_l H_{il} G_{lj}. Cross-modulus products lift the G entry
/// to an integer representative, multiply, and reduce mod the row modulus;
/// the divisibility constraint makes the lift ambiguity a multiple of
/// lcm(n_i, n_l), which vanishes mod n_i.
BlockMatrix block_mul(const BlockMatrix& h, const BlockMatrix& g);

/// (H*)_{ij} = (n_i / gcd(n_i, n_j)) A_{ji}^T where H_{ji} = (n_j / gcd) A_{ji}.
BlockMatrix adjoint_star(const BlockMatrix& h);

/// H* J H = J.
bool is_symplectic(const BlockMatrix& h);

/// Candidate inverse J^-1 H* J; a two-sided inverse for symplectic H.
BlockMatrix symplectic_inverse(const BlockMatrix& h);

/// Point of the composite phase space prod_i (Z_{n_i})^2, coordinates
/// ordered (P_1, Q_1, ..., P_k, Q_k), each reduced by its own modulus.
struct MultiPhasePoint {
  DimList dims;
  std::vector<std::int64_t> coords;
};

MultiPhasePoint multi_phase_point(const DimList& dims, std::vector<std::int64_t> coords);
bool operator==(const MultiPhasePoint& a, const MultiPhasePoint& b);
MultiPhasePoint apply_block(const BlockMatrix& h, const MultiPhasePoint& v);

/// Symplectic pairing sum_i (L/n_i)(u_Pi v_Qi - u_Qi v_Pi) mod L, where
/// L = lcm(dims); preserved by every symplectic block matrix.
std::int64_t pairing_modulus(const DimList& dims);
std::int64_t symplectic_pairing(const MultiPhasePoint& u, const MultiPhasePoint& v);

/// Number of monoid candidates prod_{ij} gcd(n_i, n_j)^4 (saturating).
std::uint64_t sp_enumeration_space(const DimList& dims);

/// All monoid elements satisfying the symplectic condition, by exhaustive
/// search over the candidate space; guarded.
std::vector<BlockMatrix> sp_enumerate(const DimList& dims,
                                      std::uint64_t guard = std::uint64_t{1} << 24);

/// I ⊗ u ⊗ I with u acting on factor t (1-based).
DenseUnitary embed_factor(const DimList& dims, std::int64_t t, const DenseUnitary& u);

/// Coupling unitary R_{ij} = I ⊗ diag(I, T_{ij}, ..., T_{ij}^{n_i - 1}) ⊗ I
/// with T_{ij} = I ⊗ Q_{n_j}^{n_j / gcd(n_i, n_j)}; 1-based i < j.
DenseUnitary build_R(const DimList& dims, std::int64_t i, std::int64_t j);

/// Recognizes x as phase * tensor(Q^{a_i} P^{b_i}) and returns the exponent
/// vector (b_1, a_1, ..., b_k, a_k) in (P, Q) coordinate order. Throws
/// NotInGroupError when x is not of that form.
std::vector<std::int64_t> extract_tensor_wh(const DenseUnitary& x, const DimList& dims);

/// Symplectic image of a normalizer element: column m is the exponent vector
/// of x A_m x^-1 for the embedded generators A_1 = P_1, A_2 = Q_1, ....
BlockMatrix extract_block_matrix(const DenseUnitary& x, const DimList& dims);

// Analytic block images of the normalizer generators (t, i, j are 0-based).
BlockMatrix fourier_pattern(const DimList& dims, std::size_t t);
BlockMatrix phase_pattern(const DimList& dims, std::size_t t);
BlockMatrix couple_pattern(const DimList& dims, std::size_t i, std::size_t j, bool inverse = false);

/// Block images of the per-factor S, D embeddings and all R_{ij}: extracted
/// through the dense oracle when the total dimension allows, produced
/// analytically beyond it (the two agree wherever the oracle runs).
std::vector<BlockMatrix> sp_generators(const DimList& dims);

/// Size of the multiplicative closure of sp_generators(dims); guarded.
std::size_t sp_closure(const DimList& dims, std::size_t guard = 1000000);

/// One factor of the symmetry-group decomposition of a composite system.
struct SymmetryFactor {
  enum class Kind { SL2, Sp2k, SpMixed };
  Kind kind = Kind::SL2;
  std::int64_t prime = 0;
  std::vector<std::int64_t> local_dims;  // ascending prime powers

  std::string display() const;
};

bool operator==(const SymmetryFactor& a, const SymmetryFactor& b);

/// Per-prime factorization of the symmetry group into SL(2,Z_{p^k}),
/// Sp(2m,Z_{p^k}) and mixed prime-power blocks, ordered by ascending prime.
std::vector<SymmetryFactor> decompose_symmetry(const DimList& dims);
std::string factors_display(const std::vector<SymmetryFactor>& factors);

/// |Sp(2k, Z_n)| via the standard prime-power formula (k = 1 recovers
/// sl2_order).
std::int64_t sp2k_order(std::int64_t k, std::int64_t n);

struct NamedCheck {
  std::string name;
  bool pass = false;
};

struct GeneratorCheckReport {
  std::vector<NamedCheck> checks;
  bool all_pass() const;
};

/// Conjugates every embedded Weyl-Heisenberg generator by every listed
/// normalizer generator and checks that the result is recognized as a tensor
/// Weyl-Heisenberg element up to phase. Total dimension <= 36.
GeneratorCheckReport verify_generator_conjugation(const DimList& dims);

}  // namespace cliffsym
