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

#include "cliffsym/weylheis.hpp"

#include <stdexcept>

#include "cliffsym/numtheory.hpp"

namespace cliffsym {

WHContext wh_context(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("wh_context: dimension must be >= 2");
  return {n, n % 2 == 0 ? 2 * n : n};
}

bool operator==(const WHContext& a, const WHContext& b) {
  return a.dim == b.dim && a.phase_order == b.phase_order;
}

namespace {
void require_same_ctx(const WHElement& a, const WHElement& b) {
  if (!(a.ctx == b.ctx)) throw std::invalid_argument("Weyl-Heisenberg elements have mismatched contexts");
}
}  // namespace

WHElement wh_element(const WHContext& ctx, std::int64_t l, std::int64_t i, std::int64_t j) {
  return {ctx, floormod(l, ctx.phase_order), floormod(i, ctx.dim), floormod(j, ctx.dim)};
}

WHElement wh_identity(const WHContext& ctx) { return {ctx, 0, 0, 0}; }

bool operator==(const WHElement& a, const WHElement& b) {
  return a.ctx == b.ctx && a.l == b.l && a.i == b.i && a.j == b.j;
}

WHElement wh_mul(const WHElement& a, const WHElement& b) {
  require_same_ctx(a, b);
  return wh_element(a.ctx, a.l + b.l + 2 * a.j * b.i, a.i + b.i, a.j + b.j);
}

WHElement wh_inverse(const WHElement& a) {
  return wh_element(a.ctx, -a.l + 2 * a.j * a.i, -a.i, -a.j);
}

std::int64_t wh_group_order(const WHContext& ctx) {
  return ctx.phase_order * ctx.dim * ctx.dim;
}

std::vector<WHElement> wh_enumerate(const WHContext& ctx) {
  std::vector<WHElement> out;
  out.reserve(static_cast<std::size_t>(wh_group_order(ctx)));
  for (std::int64_t l = 0; l < ctx.phase_order; ++l)
    for (std::int64_t i = 0; i < ctx.dim; ++i)
      for (std::int64_t j = 0; j < ctx.dim; ++j) out.push_back({ctx, l, i, j});
  return out;
}

std::vector<WHElement> center(const WHContext& ctx) {
  const auto all = wh_enumerate(ctx);
  std::vector<WHElement> out;
  for (const auto& x : all) {
    bool central = true;
    for (const auto& y : all) {
      if (!(wh_mul(x, y) == wh_mul(y, x))) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(x);
  }
  return out;
}

PhasePoint phase_point(std::int64_t dim, std::int64_t i, std::int64_t j) {
  if (dim < 2) throw std::invalid_argument("phase_point: dimension must be >= 2");
  return {dim, floormod(i, dim), floormod(j, dim)};
}

bool operator==(const PhasePoint& a, const PhasePoint& b) {
  return a.dim == b.dim && a.i == b.i && a.j == b.j;
}

PhasePoint operator+(const PhasePoint& a, const PhasePoint& b) {
  if (a.dim != b.dim) throw std::invalid_argument("phase points have mismatched dimensions");
  return phase_point(a.dim, a.i + b.i, a.j + b.j);
}

PhasePoint project(const WHElement& a) { return {a.ctx.dim, a.i, a.j}; }

std::int64_t symplectic_form(const PhasePoint& u, const PhasePoint& v) {
  if (u.dim != v.dim) throw std::invalid_argument("symplectic_form: dimension mismatch");
  return floormod(v.i * u.j - u.i * v.j, u.dim);
}

}  // namespace cliffsym
