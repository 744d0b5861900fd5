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
#include <utility>
#include <vector>

namespace cliffsym {

/// (prime, exponent) pairs with primes strictly ascending; the empty list is
/// the factorization of 1.
struct PrimeFactorization {
  std::vector<std::pair<std::int64_t, std::int64_t>> factors;

  std::int64_t value() const;  // product of prime^exponent
};

/// All prime-power parts p^k of a dimension list that share the prime p,
/// listed in the order of the originating dimensions.
struct DivisorBlock {
  std::int64_t prime = 0;
  std::vector<std::int64_t> local_dims;
};

std::int64_t floormod(std::int64_t a, std::int64_t m);

PrimeFactorization factorize(std::int64_t n);

/// Order of SL(2,Z_n) = n^3 prod_{p|n} (1 - 1/p^2), evaluated in exact
/// integer arithmetic.
std::int64_t sl2_order(std::int64_t n);

/// Per-prime regrouping of a dimension list (each dim >= 2); blocks ordered by
/// ascending prime.
std::vector<DivisorBlock> elementary_divisor_blocks(const std::vector<std::int64_t>& dims);

}  // namespace cliffsym
