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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "cliffsym/clifford1.hpp"
#include "cliffsym/errors.hpp"
#include "cliffsym/weylheis.hpp"

namespace cliffsym {

/// Base tolerance scale; the effective comparison tolerance of a unitary of
/// dimension N defaults to tol_scale() * N. Fourier-matrix products
/// accumulate error proportionally to N.
double tol_scale();
void set_tol_scale(double scale);
double default_tol(Eigen::Index dim);

/// Complex square matrix verified unitary on construction, carrying its
/// comparison tolerance. The whole numeric oracle works through these.
struct DenseUnitary {
  Eigen::MatrixXcd mat;
  double tol = 0.0;

  explicit DenseUnitary(Eigen::MatrixXcd m, double tolerance = -1.0);
  Eigen::Index dim() const { return mat.rows(); }
};

struct PhaseMatch {
  bool matched = false;
  std::complex<double> phase{0.0, 0.0};
};

bool approx_equal(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol);

/// Matched iff a = phase * b entrywise within tolerance. The phase is read
/// off the first entry of b (row-major) of magnitude > 1/(2 sqrt(N)); every
/// unitary has one in its first row.
PhaseMatch equal_up_to_phase(const DenseUnitary& a, const DenseUnitary& b);

/// X A X^dagger.
DenseUnitary ad_action(const DenseUnitary& x, const DenseUnitary& a);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
DenseUnitary identity_unitary(std::int64_t n);

std::complex<double> omega_power(std::int64_t n, std::int64_t e);  // exp(2 pi i e / n)
std::complex<double> tau_power(std::int64_t n, std::int64_t l);    // (-exp(i pi / n))^l

/// Generalized Pauli matrices: the clock Q = diag(1, w, ..., w^(N-1)) and the
/// cyclic shift P mapping |j> to |j-1 mod N>.
DenseUnitary pauli_q(std::int64_t n);
DenseUnitary pauli_p(std::int64_t n);

/// The matrix tau^l Q^i P^j.
DenseUnitary to_dense(const WHElement& a);

/// Fourier-transform unitary S with S Q S^-1 = P^-1 and S P S^-1 = Q
/// (the Hadamard gate at N = 2).
DenseUnitary build_S(std::int64_t n);

/// Diagonal phase unitary D with D Q D^-1 = Q and D P D^-1 = alpha Q P,
/// alpha = 1 (N odd) or tau^(N+1) (N even); diag(1, -i) at N = 2.
DenseUnitary build_D(std::int64_t n);

/// The unique (i, j) with w = phase * Q^i P^j, found by scanning all N^2
/// candidates. Throws NotInGroupError when no candidate matches.
PhasePoint extract_wh_coset(const DenseUnitary& w, const WHContext& ctx);

/// SL(2,Z_N) image of a normalizer element: columns are the phase-space
/// cosets of X Q X^-1 and X P X^-1. Throws NotInGroupError if either
/// conjugate is outside H(N) up to phase, and std::runtime_error if the
/// extracted determinant is not 1 (a numerical failure, never expected for
/// genuine normalizer elements).
SL2Mat phi_of(const DenseUnitary& x, const WHContext& ctx);

/// Multiplicative closure of a generating set under exact entrywise
/// comparison (no phase quotient). Throws GuardExceededError beyond `guard`
/// distinct elements.
std::vector<DenseUnitary> finite_closure(const std::vector<DenseUnitary>& generators,
                                         std::size_t guard = 10000);

}  // namespace cliffsym
