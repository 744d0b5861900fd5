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

#include "cliffsym/dense.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

#include "cliffsym/numtheory.hpp"

namespace cliffsym {

namespace {
double g_tol_scale = 1e-9;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

double tol_scale() { return g_tol_scale; }

void set_tol_scale(double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("tolerance scale must be positive");
  g_tol_scale = scale;
}

double default_tol(Eigen::Index dim) { return g_tol_scale * static_cast<double>(dim); }

DenseUnitary::DenseUnitary(Eigen::MatrixXcd m, double tolerance) : mat(std::move(m)) {
  if (mat.rows() < 1 || mat.rows() != mat.cols())
    throw std::invalid_argument("DenseUnitary: matrix must be square and nonempty");
  tol = tolerance < 0.0 ? default_tol(mat.rows()) : tolerance;
  const Eigen::MatrixXcd gram = mat * mat.adjoint();
  const double dev = (gram - Eigen::MatrixXcd::Identity(mat.rows(), mat.cols())).cwiseAbs().maxCoeff();
  if (dev > tol) throw std::invalid_argument("DenseUnitary: matrix is not unitary within tolerance");
}

bool approx_equal(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (std::abs(a(r, c) - b(r, c)) > tol) return false;
  return true;
}

PhaseMatch equal_up_to_phase(const DenseUnitary& a, const DenseUnitary& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("equal_up_to_phase: dimension mismatch");
  const double tol = std::max(a.tol, b.tol);
  const double threshold = 1.0 / (2.0 * std::sqrt(static_cast<double>(b.dim())));
  for (Eigen::Index r = 0; r < b.dim(); ++r) {
    for (Eigen::Index c = 0; c < b.dim(); ++c) {
      if (std::abs(b.mat(r, c)) <= threshold) continue;
      const std::complex<double> phase = a.mat(r, c) / b.mat(r, c);
      if (std::abs(std::abs(phase) - 1.0) > tol) return {false, {}};
      if (!approx_equal(a.mat, phase * b.mat, tol)) return {false, {}};
      return {true, phase};
    }
  }
  return {false, {}};
}

DenseUnitary ad_action(const DenseUnitary& x, const DenseUnitary& a) {
  if (x.dim() != a.dim()) throw std::invalid_argument("ad_action: dimension mismatch");
  return DenseUnitary(x.mat * a.mat * x.mat.adjoint(), std::max(x.tol, a.tol));
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DenseUnitary identity_unitary(std::int64_t n) {
  return DenseUnitary(Eigen::MatrixXcd::Identity(n, n));
}

std::complex<double> omega_power(std::int64_t n, std::int64_t e) {
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(floormod(e, n)) / static_cast<double>(n));
}

std::complex<double> tau_power(std::int64_t n, std::int64_t l) {
  // tau = -exp(i pi / n) = exp(i pi (n+1) / n); reduce the exponent mod 2n
  // before evaluating to keep the angle small.
  const std::int64_t r = floormod(l * (n + 1), 2 * n);
  return std::polar(1.0, kPi * static_cast<double>(r) / static_cast<double>(n));
}

DenseUnitary pauli_q(std::int64_t n) {
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(n, n);
  for (std::int64_t r = 0; r < n; ++r) q(r, r) = omega_power(n, r);
  return DenseUnitary(std::move(q));
}

DenseUnitary pauli_p(std::int64_t n) {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  for (std::int64_t r = 0; r < n; ++r) p(r, (r + 1) % n) = 1.0;
  return DenseUnitary(std::move(p));
}

DenseUnitary to_dense(const WHElement& a) {
  const std::int64_t n = a.ctx.dim;
  const std::complex<double> phase = tau_power(n, a.l);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  // (Q^i P^j)[r][c] = omega^(i r) delta(c = r + j)
  for (std::int64_t r = 0; r < n; ++r) m(r, (r + a.j) % n) = phase * omega_power(n, a.i * r);
  return DenseUnitary(std::move(m));
}

DenseUnitary build_S(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("build_S: dimension must be >= 2");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::MatrixXcd s(n, n);
  for (std::int64_t j = 0; j < n; ++j)
    for (std::int64_t k = 0; k < n; ++k) s(j, k) = scale * omega_power(n, -j * k);
  return DenseUnitary(std::move(s));
}

DenseUnitary build_D(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("build_D: dimension must be >= 2");
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
  for (std::int64_t j = 0; j < n; ++j) {
    const std::int64_t e = n % 2 == 1 ? j * (1 - j) : j * (n - j);
    d(j, j) = tau_power(n, e);
  }
  return DenseUnitary(std::move(d));
}

PhasePoint extract_wh_coset(const DenseUnitary& w, const WHContext& ctx) {
  if (w.dim() != ctx.dim) throw std::invalid_argument("extract_wh_coset: dimension mismatch");
  for (std::int64_t i = 0; i < ctx.dim; ++i) {
    for (std::int64_t j = 0; j < ctx.dim; ++j) {
      const DenseUnitary cand = to_dense(wh_element(ctx, 0, i, j));
      if (equal_up_to_phase(w, cand).matched) return phase_point(ctx.dim, i, j);
    }
  }
  throw NotInGroupError("operator is not in the Weyl-Heisenberg group up to phase");
}

SL2Mat phi_of(const DenseUnitary& x, const WHContext& ctx) {
  if (x.dim() != ctx.dim) throw std::invalid_argument("phi_of: dimension mismatch");
  const PhasePoint q_img = extract_wh_coset(ad_action(x, pauli_q(ctx.dim)), ctx);
  const PhasePoint p_img = extract_wh_coset(ad_action(x, pauli_p(ctx.dim)), ctx);
  const std::int64_t n = ctx.dim;
  const std::int64_t det = floormod(q_img.i * p_img.j - q_img.j * p_img.i, n);
  if (det != 1)
    throw std::runtime_error("phi_of: extracted matrix has determinant != 1 mod N");
  return sl2_mat(n, q_img.i, q_img.j, p_img.i, p_img.j);
}

std::vector<DenseUnitary> finite_closure(const std::vector<DenseUnitary>& generators,
                                         std::size_t guard) {
  if (generators.empty()) throw std::invalid_argument("finite_closure: no generators");
  const Eigen::Index n = generators.front().dim();
  double tol = 0.0;
  for (const auto& g : generators) {
    if (g.dim() != n) throw std::invalid_argument("finite_closure: generators have mixed dimensions");
    tol = std::max(tol, g.tol);
  }

  std::vector<DenseUnitary> elems;
  auto find = [&](const Eigen::MatrixXcd& m) {
    for (const auto& e : elems)
      if (approx_equal(e.mat, m, tol)) return true;
    return false;
  };

  std::deque<std::size_t> work;
  for (const auto& g : generators) {
    if (!find(g.mat)) {
      elems.push_back(g);
      work.push_back(elems.size() - 1);
    }
  }
  while (!work.empty()) {
    const std::size_t idx = work.front();
    work.pop_front();
    for (const auto& g : generators) {
      Eigen::MatrixXcd prod = elems[idx].mat * g.mat;
      if (find(prod)) continue;
      if (elems.size() >= guard)
        throw GuardExceededError("finite_closure: closure exceeds guard of " + std::to_string(guard));
      elems.emplace_back(std::move(prod), tol);
      work.push_back(elems.size() - 1);
    }
  }
  return elems;
}

}  // namespace cliffsym
