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

#include "cliffsym/numtheory.hpp"

#include <map>
#include <stdexcept>

namespace cliffsym {

std::int64_t floormod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t PrimeFactorization::value() const {
  std::int64_t n = 1;
  for (auto [p, k] : factors) {
    for (std::int64_t e = 0; e < k; ++e) n *= p;
  }
  return n;
}

PrimeFactorization factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: input must be a positive integer");
  PrimeFactorization f;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::int64_t k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    f.factors.emplace_back(p, k);
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

std::int64_t sl2_order(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("sl2_order: modulus must be >= 2");
  // n^3 prod (1 - 1/p^2) = prod p^(3k-2) (p^2 - 1) over n = prod p^k.
  std::int64_t order = 1;
  for (auto [p, k] : factorize(n).factors) {
    std::int64_t pw = 1;
    for (std::int64_t e = 0; e < 3 * k - 2; ++e) pw *= p;
    order *= pw * (p * p - 1);
  }
  return order;
}

std::vector<DivisorBlock> elementary_divisor_blocks(const std::vector<std::int64_t>& dims) {
  if (dims.empty()) throw std::invalid_argument("elementary_divisor_blocks: empty dimension list");
  std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
  for (std::int64_t d : dims) {
    if (d < 2) throw std::invalid_argument("elementary_divisor_blocks: every dimension must be >= 2");
    for (auto [p, k] : factorize(d).factors) {
      std::int64_t pw = 1;
      for (std::int64_t e = 0; e < k; ++e) pw *= p;
      by_prime[p].push_back(pw);
    }
  }
  std::vector<DivisorBlock> blocks;
  blocks.reserve(by_prime.size());
  for (auto& [p, locals] : by_prime) blocks.push_back({p, std::move(locals)});
  return blocks;
}

}  // namespace cliffsym
