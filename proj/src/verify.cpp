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

#include "cliffsym/verify.hpp"

#include <cmath>
#include <random>

namespace cliffsym {

bool wh_group_axioms_hold(const WHContext& ctx, std::uint64_t seed, std::size_t samples) {
  const auto all = wh_enumerate(ctx);
  const WHElement id = wh_identity(ctx);

  for (const auto& x : all) {
    if (!(wh_mul(id, x) == x) || !(wh_mul(x, id) == x)) return false;
    const WHElement inv = wh_inverse(x);
    if (!(wh_mul(x, inv) == id) || !(wh_mul(inv, x) == id)) return false;
  }

  auto assoc = [](const WHElement& a, const WHElement& b, const WHElement& c) {
    return wh_mul(wh_mul(a, b), c) == wh_mul(a, wh_mul(b, c));
  };
  if (ctx.dim <= 4) {
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all)
          if (!assoc(a, b, c)) return false;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (std::size_t s = 0; s < samples; ++s)
      if (!assoc(all[pick(rng)], all[pick(rng)], all[pick(rng)])) return false;
  }
  return true;
}

bool wh_center_matches_formula(const WHContext& ctx) {
  const auto computed = center(ctx);
  if (computed.size() != static_cast<std::size_t>(ctx.phase_order)) return false;
  for (const auto& z : computed)
    if (z.i != 0 || z.j != 0) return false;
  return true;
}

bool wh_dense_faithful(const WHContext& ctx) {
  const auto all = wh_enumerate(ctx);
  std::vector<DenseUnitary> images;
  images.reserve(all.size());
  for (const auto& x : all) images.push_back(to_dense(x));
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a + 1; b < images.size(); ++b)
      if (approx_equal(images[a].mat, images[b].mat, images[a].tol)) return false;
  return images.size() == static_cast<std::size_t>(wh_group_order(ctx));
}

bool to_dense_homomorphism_holds(const WHContext& ctx, std::uint64_t seed, std::size_t pairs) {
  const auto all = wh_enumerate(ctx);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (std::size_t s = 0; s < pairs; ++s) {
    const WHElement& a = all[pick(rng)];
    const WHElement& b = all[pick(rng)];
    const DenseUnitary lhs = to_dense(wh_mul(a, b));
    if (!approx_equal(lhs.mat, to_dense(a).mat * to_dense(b).mat, lhs.tol)) return false;
  }
  return true;
}

bool generator_relations_hold(std::int64_t n) {
  const DenseUnitary s = build_S(n), d = build_D(n);
  const DenseUnitary q = pauli_q(n), p = pauli_p(n);
  const double tol = default_tol(n);
  const Eigen::MatrixXcd p_inv = p.mat.adjoint();
  if (!approx_equal(ad_action(s, q).mat, p_inv, tol)) return false;
  if (!approx_equal(ad_action(s, p).mat, q.mat, tol)) return false;
  if (!approx_equal(ad_action(d, q).mat, q.mat, tol)) return false;
  const std::complex<double> alpha = n % 2 == 1 ? std::complex<double>{1.0, 0.0} : tau_power(n, n + 1);
  if (!approx_equal(ad_action(d, p).mat, alpha * (q.mat * p.mat), tol)) return false;
  return true;
}

bool phi_generator_images_match(std::int64_t n) {
  const WHContext ctx = wh_context(n);
  return phi_of(build_S(n), ctx) == phi_S(n) && phi_of(build_D(n), ctx) == phi_D(n);
}

bool phi_homomorphism_holds(std::int64_t n, std::uint64_t seed, std::size_t word_count) {
  const WHContext ctx = wh_context(n);
  const DenseUnitary letters[4] = {build_S(n), build_D(n), pauli_q(n), pauli_p(n)};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_int_distribution<int> length(1, 6);
  for (std::size_t w = 0; w < word_count; ++w) {
    const int len = length(rng);
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Identity(n, n);
    SL2Mat expected = sl2_identity(n);
    for (int l = 0; l < len; ++l) {
      const DenseUnitary& g = letters[letter(rng)];
      x = x * g.mat;
      expected = sl2_mul(expected, phi_of(g, ctx));
    }
    if (!(phi_of(DenseUnitary(std::move(x)), ctx) == expected)) return false;
  }
  return true;
}

bool phi_phase_invariant(std::int64_t n, std::uint64_t seed, std::size_t samples) {
  const WHContext ctx = wh_context(n);
  const DenseUnitary s = build_S(n);
  const SL2Mat expected = phi_of(s, ctx);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  for (std::size_t k = 0; k < samples; ++k) {
    const std::complex<double> phase = std::polar(1.0, angle(rng));
    if (!(phi_of(DenseUnitary(phase * s.mat), ctx) == expected)) return false;
  }
  return true;
}

bool sl2_act_preserves_form(std::int64_t n, std::uint64_t seed, std::size_t samples) {
  const auto mats = sl2_enumerate(n);
  auto preserved = [n](const SL2Mat& m, const PhasePoint& u, const PhasePoint& v) {
    return symplectic_form(sl2_act(m, u), sl2_act(m, v)) == symplectic_form(u, v);
  };
  if (n <= 4) {
    for (const auto& m : mats)
      for (std::int64_t ui = 0; ui < n; ++ui)
        for (std::int64_t uj = 0; uj < n; ++uj)
          for (std::int64_t vi = 0; vi < n; ++vi)
            for (std::int64_t vj = 0; vj < n; ++vj)
              if (!preserved(m, phase_point(n, ui, uj), phase_point(n, vi, vj))) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_m(0, mats.size() - 1);
  std::uniform_int_distribution<std::int64_t> pick_c(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const PhasePoint u = phase_point(n, pick_c(rng), pick_c(rng));
    const PhasePoint v = phase_point(n, pick_c(rng), pick_c(rng));
    if (!preserved(mats[pick_m(rng)], u, v)) return false;
  }
  return true;
}

bool block_divisibility_ok(const BlockMatrix& h) {
  const std::int64_t size = h.size();
  for (std::int64_t r = 0; r < size; ++r)
    for (std::int64_t c = 0; c < size; ++c)
      if (h.at(r, c) % required_divisor(h.dims, r, c) != 0) return false;
  return true;
}

BlockMatrix random_block_matrix(const DimList& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::int64_t size = 2 * static_cast<std::int64_t>(dims.factors());
  BlockMatrix h{dims, std::vector<std::int64_t>(size * size, 0)};
  for (std::int64_t r = 0; r < size; ++r) {
    for (std::int64_t c = 0; c < size; ++c) {
      const std::int64_t step = required_divisor(dims, r, c);
      const std::int64_t count = dims.dims[r / 2] / step;
      std::uniform_int_distribution<std::int64_t> digit(0, count - 1);
      h.at(r, c) = digit(rng) * step;
    }
  }
  return h;
}

bool block_monoid_closed(const DimList& dims, std::uint64_t seed, std::size_t samples) {
  for (std::size_t s = 0; s < samples; ++s) {
    const BlockMatrix a = random_block_matrix(dims, seed * 1000003 + 2 * s);
    const BlockMatrix b = random_block_matrix(dims, seed * 1000003 + 2 * s + 1);
    if (!block_divisibility_ok(block_mul(a, b))) return false;
  }
  return true;
}

bool cross_modulus_lift_invariant(const DimList& dims, std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> shift(-3, 3);
  for (std::size_t s = 0; s < samples; ++s) {
    const BlockMatrix a = random_block_matrix(dims, seed * 999983 + 2 * s);
    const BlockMatrix b = random_block_matrix(dims, seed * 999983 + 2 * s + 1);
    // replace entries by other integer representatives mod the row modulus
    BlockMatrix a_lift = a, b_lift = b;
    for (std::int64_t e = 0; e < a.size() * a.size(); ++e) {
      a_lift.m[e] += shift(rng) * a.row_modulus(e / a.size());
      b_lift.m[e] += shift(rng) * b.row_modulus(e / b.size());
    }
    if (!(block_mul(a_lift, b) == block_mul(a, b))) return false;
    if (!(block_mul(a, b_lift) == block_mul(a, b))) return false;
  }
  return true;
}

bool extract_homomorphism_holds(const DimList& dims, std::uint64_t seed, std::size_t words) {
  const std::size_t k = dims.factors();
  std::vector<DenseUnitary> gens;
  for (std::size_t t = 0; t < k; ++t) {
    gens.push_back(embed_factor(dims, t + 1, build_S(dims.dims[t])));
    gens.push_back(embed_factor(dims, t + 1, build_D(dims.dims[t])));
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) gens.push_back(build_R(dims, i + 1, j + 1));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> length(2, 5);
  const std::int64_t n = dims.total_dim();
  for (std::size_t w = 0; w < words; ++w) {
    const int len = length(rng);
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Identity(n, n);
    BlockMatrix expected = block_identity(dims);
    for (int l = 0; l < len; ++l) {
      const DenseUnitary& g = gens[pick(rng)];
      x = g.mat * x;
      expected = block_mul(extract_block_matrix(g, dims), expected);
    }
    if (!(extract_block_matrix(DenseUnitary(std::move(x)), dims) == expected)) return false;
  }
  return true;
}

}  // namespace cliffsym
