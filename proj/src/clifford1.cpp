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

#include "cliffsym/clifford1.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "cliffsym/numtheory.hpp"

namespace cliffsym {

namespace {

constexpr std::int64_t kEnumGuard = 12;

void require_same_modulus(std::int64_t m, std::int64_t n) {
  if (m != n) throw std::invalid_argument("SL(2,Z_n) operands have mismatched moduli");
}

std::int64_t det_mod(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return floormod(a * d - b * c, n);
}

std::int64_t encode(const SL2Mat& m) {
  return ((m.a * m.n + m.b) * m.n + m.c) * m.n + m.d;
}

}  // namespace

SL2Mat sl2_mat(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  if (n < 2) throw std::invalid_argument("sl2_mat: modulus must be >= 2");
  a = floormod(a, n);
  b = floormod(b, n);
  c = floormod(c, n);
  d = floormod(d, n);
  if (det_mod(n, a, b, c, d) != 1)
    throw std::invalid_argument("sl2_mat: determinant is not 1 mod n");
  return {n, a, b, c, d};
}

SL2Mat sl2_identity(std::int64_t n) { return sl2_mat(n, 1, 0, 0, 1); }

bool operator==(const SL2Mat& x, const SL2Mat& y) {
  return x.n == y.n && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

SL2Mat sl2_mul(const SL2Mat& x, const SL2Mat& y) {
  require_same_modulus(x.n, y.n);
  const std::int64_t n = x.n;
  return {n,
          floormod(x.a * y.a + x.c * y.b, n),
          floormod(x.b * y.a + x.d * y.b, n),
          floormod(x.a * y.c + x.c * y.d, n),
          floormod(x.b * y.c + x.d * y.d, n)};
}

SL2Mat sl2_inverse(const SL2Mat& x) {
  // adjugate; valid because det = 1
  return {x.n, floormod(x.d, x.n), floormod(-x.b, x.n), floormod(-x.c, x.n), floormod(x.a, x.n)};
}

PhasePoint sl2_act(const SL2Mat& m, const PhasePoint& p) {
  require_same_modulus(m.n, p.dim);
  return phase_point(p.dim, m.a * p.i + m.c * p.j, m.b * p.i + m.d * p.j);
}

std::vector<SL2Mat> sl2_enumerate(std::int64_t n) {
  if (n < 2 || n > kEnumGuard)
    throw std::invalid_argument("sl2_enumerate: modulus must be within 2..12 (enumeration guard)");
  std::vector<SL2Mat> out;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        for (std::int64_t d = 0; d < n; ++d)
          if (det_mod(n, a, b, c, d) == 1) out.push_back({n, a, b, c, d});
  return out;
}

SL2Mat phi_S(std::int64_t n) { return sl2_mat(n, 0, -1, 1, 0); }
SL2Mat phi_D(std::int64_t n) { return sl2_mat(n, 1, 0, 1, 1); }

CliffordElem clifford_elem(const PhasePoint& t, const SL2Mat& m) {
  require_same_modulus(t.dim, m.n);
  return {t, m};
}

CliffordElem clifford_identity(std::int64_t n) {
  return {phase_point(n, 0, 0), sl2_identity(n)};
}

bool operator==(const CliffordElem& x, const CliffordElem& y) {
  return x.t == y.t && x.m == y.m;
}

CliffordElem clifford_mul(const CliffordElem& x, const CliffordElem& y) {
  require_same_modulus(x.m.n, y.m.n);
  return {x.t + sl2_act(x.m, y.t), sl2_mul(x.m, y.m)};
}

CliffordElem clifford_inverse(const CliffordElem& x) {
  const SL2Mat mi = sl2_inverse(x.m);
  return {sl2_act(mi, phase_point(x.t.dim, -x.t.i, -x.t.j)), mi};
}

SL2Mat letter_image(Letter l, std::int64_t n) {
  switch (l) {
    case Letter::S: return phi_S(n);
    case Letter::SInv: return sl2_inverse(phi_S(n));
    case Letter::D: return phi_D(n);
    case Letter::DInv: return sl2_inverse(phi_D(n));
  }
  throw std::invalid_argument("unknown generator letter");
}

SL2Mat eval_word(const GeneratorWord& w, std::int64_t n) {
  SL2Mat acc = sl2_identity(n);
  for (Letter l : w.letters) acc = sl2_mul(acc, letter_image(l, n));
  return acc;
}

std::string word_to_string(const GeneratorWord& w) {
  if (w.letters.empty()) return "(empty)";
  std::string out;
  for (Letter l : w.letters) {
    if (!out.empty()) out += ' ';
    switch (l) {
      case Letter::S: out += "S"; break;
      case Letter::SInv: out += "S^-1"; break;
      case Letter::D: out += "D"; break;
      case Letter::DInv: out += "D^-1"; break;
    }
  }
  return out;
}

namespace {

// Breadth-first search over words in {S, S^-1, D, D^-1}, expanding letters in
// that order so the first word reaching a matrix is the lexicographically
// smallest shortest one.
struct BfsResult {
  std::unordered_map<std::int64_t, std::pair<std::int64_t, int>> parent;  // node -> (prev, letter)
};

BfsResult sl2_bfs(std::int64_t n) {
  if (n < 2 || n > kEnumGuard)
    throw std::invalid_argument("lift_sl2: modulus must be within 2..12 (enumeration guard)");
  const Letter letters[4] = {Letter::S, Letter::SInv, Letter::D, Letter::DInv};
  SL2Mat images[4];
  for (int t = 0; t < 4; ++t) images[t] = letter_image(letters[t], n);

  BfsResult res;
  std::deque<SL2Mat> queue;
  const SL2Mat id = sl2_identity(n);
  res.parent.emplace(encode(id), std::make_pair(std::int64_t{-1}, -1));
  queue.push_back(id);
  while (!queue.empty()) {
    SL2Mat cur = queue.front();
    queue.pop_front();
    const std::int64_t cur_key = encode(cur);
    for (int t = 0; t < 4; ++t) {
      SL2Mat next = sl2_mul(cur, images[t]);
      const std::int64_t key = encode(next);
      if (res.parent.emplace(key, std::make_pair(cur_key, t)).second) queue.push_back(next);
    }
  }
  return res;
}

}  // namespace

GeneratorWord lift_sl2(const SL2Mat& m) {
  const BfsResult bfs = sl2_bfs(m.n);
  auto it = bfs.parent.find(encode(m));
  if (it == bfs.parent.end())
    throw std::runtime_error("lift_sl2: target unreachable from {S, D} (implementation bug)");
  std::vector<Letter> letters;
  std::int64_t key = encode(m);
  while (true) {
    const auto& [prev, letter] = bfs.parent.at(key);
    if (letter < 0) break;
    letters.push_back(static_cast<Letter>(letter));
    key = prev;
  }
  std::reverse(letters.begin(), letters.end());
  return {std::move(letters)};
}

std::size_t sl2_generated_count(std::int64_t n) { return sl2_bfs(n).parent.size(); }

}  // namespace cliffsym
