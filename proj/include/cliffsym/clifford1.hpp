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

#include "cliffsym/weylheis.hpp"

namespace cliffsym {

/// 2x2 matrix [[a, c], [b, d]] over Z_n with determinant ad - bc = 1 (mod n).
/// The columns are the phase-space images of the cosets Q and P: conjugation
/// sending Q to Q^a P^b and P to Q^c P^d has matrix [[a, c], [b, d]].
struct SL2Mat {
  std::int64_t n = 0;
  std::int64_t a = 0, b = 0, c = 0, d = 0;
};

SL2Mat sl2_mat(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
SL2Mat sl2_identity(std::int64_t n);
bool operator==(const SL2Mat& x, const SL2Mat& y);

SL2Mat sl2_mul(const SL2Mat& x, const SL2Mat& y);
SL2Mat sl2_inverse(const SL2Mat& x);

/// Left action on column vectors: (i, j)^T -> M (i, j)^T.
PhasePoint sl2_act(const SL2Mat& m, const PhasePoint& p);

/// All elements of SL(2,Z_n); guarded to 2 <= n <= 12.
std::vector<SL2Mat> sl2_enumerate(std::int64_t n);

/// Images of the Fourier and phase generators in SL(2,Z_n):
/// phi_S = [[0,1],[-1,0]], phi_D = [[1,1],[0,1]].
SL2Mat phi_S(std::int64_t n);
SL2Mat phi_D(std::int64_t n);

/// Element of the Clifford quotient group (Z_n x Z_n) : SL(2,Z_n),
/// a semidirect pair (translation, matrix).
struct CliffordElem {
  PhasePoint t;
  SL2Mat m;
};

CliffordElem clifford_elem(const PhasePoint& t, const SL2Mat& m);
CliffordElem clifford_identity(std::int64_t n);
bool operator==(const CliffordElem& x, const CliffordElem& y);

// (t1, M1)(t2, M2) = (t1 + M1 t2, M1 M2).
CliffordElem clifford_mul(const CliffordElem& x, const CliffordElem& y);
CliffordElem clifford_inverse(const CliffordElem& x);

enum class Letter { S, SInv, D, DInv };

/// Word over the generator alphabet {S, S^-1, D, D^-1}.
struct GeneratorWord {
  std::vector<Letter> letters;
};

SL2Mat letter_image(Letter l, std::int64_t n);
SL2Mat eval_word(const GeneratorWord& w, std::int64_t n);
std::string word_to_string(const GeneratorWord& w);

/// Shortest word in {phi_S, phi_D}^{+-1} whose product is m, ties broken by
/// the letter order S < S^-1 < D < D^-1. BFS over SL(2,Z_n).
GeneratorWord lift_sl2(const SL2Mat& m);

/// Number of matrices reachable from the identity by the BFS alphabet;
/// equals sl2_order(n) since phi_S and phi_D generate SL(2,Z_n).
std::size_t sl2_generated_count(std::int64_t n);

}  // namespace cliffsym
