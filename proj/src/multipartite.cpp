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

#include "cliffsym/multipartite.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace cliffsym {

std::int64_t DimList::total_dim() const {
  std::int64_t n = 1;
  for (std::int64_t d : dims) {
    if (n > std::numeric_limits<std::int64_t>::max() / d) return std::numeric_limits<std::int64_t>::max();
    n *= d;
  }
  return n;
}

DimList dim_list(std::vector<std::int64_t> dims) {
  if (dims.empty()) throw std::invalid_argument("dim_list: empty dimension list");
  for (std::int64_t d : dims)
    if (d < 2) throw std::invalid_argument("dim_list: every factor dimension must be >= 2");
  return {std::move(dims)};
}

bool operator==(const DimList& a, const DimList& b) { return a.dims == b.dims; }

namespace {

void require_same_dims(const DimList& a, const DimList& b) {
  if (!(a == b)) throw std::invalid_argument("block operands have mismatched dimension lists");
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::vector<std::int64_t> unflatten(std::int64_t flat, const std::vector<std::int64_t>& dims) {
  std::vector<std::int64_t> digits(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    digits[i] = flat % dims[i];
    flat /= dims[i];
  }
  return digits;
}

std::int64_t flatten(const std::vector<std::int64_t>& digits, const std::vector<std::int64_t>& dims) {
  std::int64_t flat = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) flat = flat * dims[i] + floormod(digits[i], dims[i]);
  return flat;
}

}  // namespace

std::int64_t required_divisor(const DimList& dims, std::int64_t r, std::int64_t c) {
  const std::int64_t ni = dims.dims[r / 2];
  const std::int64_t nj = dims.dims[c / 2];
  return ni / gcd64(ni, nj);
}

BlockMatrix block_matrix(const DimList& dims, std::vector<std::int64_t> entries) {
  const std::int64_t size = 2 * static_cast<std::int64_t>(dims.factors());
  if (static_cast<std::int64_t>(entries.size()) != size * size)
    throw std::invalid_argument("block_matrix: wrong number of entries");
  BlockMatrix h{dims, std::move(entries)};
  for (std::int64_t r = 0; r < size; ++r) {
    for (std::int64_t c = 0; c < size; ++c) {
      std::int64_t& e = h.at(r, c);
      e = floormod(e, h.row_modulus(r));
      if (e % required_divisor(dims, r, c) != 0)
        throw std::invalid_argument("block_matrix: entry violates the divisibility constraint");
    }
  }
  return h;
}

BlockMatrix block_identity(const DimList& dims) {
  const std::int64_t size = 2 * static_cast<std::int64_t>(dims.factors());
  BlockMatrix h{dims, std::vector<std::int64_t>(size * size, 0)};
  for (std::int64_t r = 0; r < size; ++r) h.at(r, r) = 1;
  return h;
}

BlockMatrix block_j(const DimList& dims) {
  const std::int64_t size = 2 * static_cast<std::int64_t>(dims.factors());
  BlockMatrix h{dims, std::vector<std::int64_t>(size * size, 0)};
  for (std::size_t t = 0; t < dims.factors(); ++t) {
    const std::int64_t n = dims.dims[t];
    const std::int64_t p = 2 * static_cast<std::int64_t>(t);
    h.at(p, p + 1) = 1;
    h.at(p + 1, p) = floormod(-1, n);
  }
  return h;
}

bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
  return a.dims == b.dims && a.m == b.m;
}

BlockMatrix block_mul(const BlockMatrix& h, const BlockMatrix& g) {
  require_same_dims(h.dims, g.dims);
  const std::int64_t size = h.size();
  BlockMatrix out{h.dims, std::vector<std::int64_t>(size * size, 0)};
  for (std::int64_t r = 0; r < size; ++r) {
    const std::int64_t mod = out.row_modulus(r);
    for (std::int64_t c = 0; c < size; ++c) {
      std::int64_t acc = 0;
      for (std::int64_t l = 0; l < size; ++l) acc += h.at(r, l) * g.at(l, c) % mod;
      out.at(r, c) = floormod(acc, mod);
    }
  }
  return out;
}

BlockMatrix adjoint_star(const BlockMatrix& h) {
  const std::int64_t size = h.size();
  BlockMatrix out{h.dims, std::vector<std::int64_t>(size * size, 0)};
  const auto& dims = h.dims.dims;
  for (std::size_t i = 0; i < h.dims.factors(); ++i) {
    for (std::size_t j = 0; j < h.dims.factors(); ++j) {
      const std::int64_t ni = dims[i], nj = dims[j];
      const std::int64_t g = gcd64(ni, nj);
      const std::int64_t scale_i = ni / g, scale_j = nj / g;
      // (H*)_{ij} = scale_i * A_{ji}^T where H_{ji} = scale_j * A_{ji}
      for (std::int64_t r = 0; r < 2; ++r) {
        for (std::int64_t c = 0; c < 2; ++c) {
          const std::int64_t entry = h.at(2 * j + c, 2 * i + r);
          out.at(2 * i + r, 2 * j + c) = floormod(scale_i * (entry / scale_j), ni);
        }
      }
    }
  }
  return out;
}

bool is_symplectic(const BlockMatrix& h) {
  const BlockMatrix j = block_j(h.dims);
  return block_mul(adjoint_star(h), block_mul(j, h)) == j;
}

BlockMatrix symplectic_inverse(const BlockMatrix& h) {
  // J^-1 = -J
  const BlockMatrix j = block_j(h.dims);
  BlockMatrix jinv = j;
  for (std::int64_t r = 0; r < j.size(); ++r)
    for (std::int64_t c = 0; c < j.size(); ++c)
      jinv.at(r, c) = floormod(-j.at(r, c), jinv.row_modulus(r));
  return block_mul(jinv, block_mul(adjoint_star(h), j));
}

MultiPhasePoint multi_phase_point(const DimList& dims, std::vector<std::int64_t> coords) {
  if (coords.size() != 2 * dims.factors())
    throw std::invalid_argument("multi_phase_point: wrong coordinate count");
  for (std::size_t c = 0; c < coords.size(); ++c) coords[c] = floormod(coords[c], dims.dims[c / 2]);
  return {dims, std::move(coords)};
}

bool operator==(const MultiPhasePoint& a, const MultiPhasePoint& b) {
  return a.dims == b.dims && a.coords == b.coords;
}

MultiPhasePoint apply_block(const BlockMatrix& h, const MultiPhasePoint& v) {
  require_same_dims(h.dims, v.dims);
  const std::int64_t size = h.size();
  std::vector<std::int64_t> out(size, 0);
  for (std::int64_t r = 0; r < size; ++r) {
    std::int64_t acc = 0;
    for (std::int64_t c = 0; c < size; ++c) acc += h.at(r, c) * v.coords[c] % h.row_modulus(r);
    out[r] = floormod(acc, h.row_modulus(r));
  }
  return {h.dims, std::move(out)};
}

std::int64_t pairing_modulus(const DimList& dims) {
  std::int64_t l = 1;
  for (std::int64_t d : dims.dims) l = std::lcm(l, d);
  return l;
}

std::int64_t symplectic_pairing(const MultiPhasePoint& u, const MultiPhasePoint& v) {
  require_same_dims(u.dims, v.dims);
  const std::int64_t big = pairing_modulus(u.dims);
  std::int64_t acc = 0;
  for (std::size_t t = 0; t < u.dims.factors(); ++t) {
    const std::int64_t scale = big / u.dims.dims[t];
    const std::int64_t up = u.coords[2 * t], uq = u.coords[2 * t + 1];
    const std::int64_t vp = v.coords[2 * t], vq = v.coords[2 * t + 1];
    acc = floormod(acc + scale * (up * vq - uq * vp), big);
  }
  return acc;
}

std::uint64_t sp_enumeration_space(const DimList& dims) {
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < dims.factors(); ++i) {
    for (std::size_t j = 0; j < dims.factors(); ++j) {
      const std::uint64_t g = static_cast<std::uint64_t>(gcd64(dims.dims[i], dims.dims[j]));
      for (int e = 0; e < 4; ++e) {
        if (space > std::numeric_limits<std::uint64_t>::max() / g)
          return std::numeric_limits<std::uint64_t>::max();
        space *= g;
      }
    }
  }
  return space;
}

std::vector<BlockMatrix> sp_enumerate(const DimList& dims, std::uint64_t guard) {
  const std::uint64_t space = sp_enumeration_space(dims);
  if (space > guard)
    throw GuardExceededError("sp_enumerate: candidate space " + std::to_string(space) +
                             " exceeds guard " + std::to_string(guard));
  const std::int64_t size = 2 * static_cast<std::int64_t>(dims.factors());
  const std::int64_t cells = size * size;
  std::vector<std::int64_t> counts(cells), steps(cells);
  for (std::int64_t r = 0; r < size; ++r) {
    for (std::int64_t c = 0; c < size; ++c) {
      const std::int64_t step = required_divisor(dims, r, c);
      steps[r * size + c] = step;
      counts[r * size + c] = dims.dims[r / 2] / step;
    }
  }

  std::vector<BlockMatrix> out;
  std::vector<std::int64_t> digit(cells, 0);
  BlockMatrix cand{dims, std::vector<std::int64_t>(cells, 0)};
  while (true) {
    for (std::int64_t e = 0; e < cells; ++e) cand.m[e] = digit[e] * steps[e];
    if (is_symplectic(cand)) out.push_back(cand);
    std::int64_t pos = cells - 1;
    while (pos >= 0) {
      if (++digit[pos] < counts[pos]) break;
      digit[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

DenseUnitary embed_factor(const DimList& dims, std::int64_t t, const DenseUnitary& u) {
  const std::int64_t k = static_cast<std::int64_t>(dims.factors());
  if (t < 1 || t > k) throw std::invalid_argument("embed_factor: factor index out of range");
  if (u.dim() != dims.dims[t - 1])
    throw std::invalid_argument("embed_factor: operator dimension does not match the factor");
  std::int64_t left = 1, right = 1;
  for (std::int64_t l = 0; l < t - 1; ++l) left *= dims.dims[l];
  for (std::int64_t l = t; l < k; ++l) right *= dims.dims[l];
  Eigen::MatrixXcd m = kron(kron(Eigen::MatrixXcd::Identity(left, left), u.mat),
                            Eigen::MatrixXcd::Identity(right, right));
  return DenseUnitary(std::move(m), default_tol(m.rows()));
}

DenseUnitary build_R(const DimList& dims, std::int64_t i, std::int64_t j) {
  const std::int64_t k = static_cast<std::int64_t>(dims.factors());
  if (i < 1 || j <= i || j > k) throw std::invalid_argument("build_R: need 1 <= i < j <= k");
  const auto& d = dims.dims;
  const std::int64_t ni = d[i - 1], nj = d[j - 1];
  const std::int64_t g = gcd64(ni, nj);

  std::int64_t left = 1, mid_ident = 1, right = 1;
  for (std::int64_t l = 0; l < i - 1; ++l) left *= d[l];
  for (std::int64_t l = i; l < j - 1; ++l) mid_ident *= d[l];
  for (std::int64_t l = j; l < k; ++l) right *= d[l];

  // T = I ⊗ Q_{n_j}^{n_j / g}
  Eigen::MatrixXcd qpow = Eigen::MatrixXcd::Zero(nj, nj);
  for (std::int64_t r = 0; r < nj; ++r) qpow(r, r) = omega_power(nj, (nj / g) * r);
  const Eigen::MatrixXcd t_mat = kron(Eigen::MatrixXcd::Identity(mid_ident, mid_ident), qpow);

  const std::int64_t m_dim = t_mat.rows();
  Eigen::MatrixXcd mid = Eigen::MatrixXcd::Zero(ni * m_dim, ni * m_dim);
  Eigen::MatrixXcd t_pow = Eigen::MatrixXcd::Identity(m_dim, m_dim);
  for (std::int64_t p = 0; p < ni; ++p) {
    mid.block(p * m_dim, p * m_dim, m_dim, m_dim) = t_pow;
    t_pow = t_pow * t_mat;
  }

  Eigen::MatrixXcd r_mat = kron(kron(Eigen::MatrixXcd::Identity(left, left), mid),
                                Eigen::MatrixXcd::Identity(right, right));
  return DenseUnitary(std::move(r_mat));
}

std::vector<std::int64_t> extract_tensor_wh(const DenseUnitary& x, const DimList& dims) {
  const std::int64_t n = dims.total_dim();
  if (x.dim() != n) throw std::invalid_argument("extract_tensor_wh: dimension mismatch");
  const std::size_t k = dims.factors();
  const double tol = x.tol;

  // Shift exponents b_i from the position of the single unit-magnitude entry
  // in row 0; the phase is that entry itself.
  std::int64_t c0 = 0;
  double best = 0.0;
  for (std::int64_t c = 0; c < n; ++c) {
    const double mag = std::abs(x.mat(0, c));
    if (mag > best) {
      best = mag;
      c0 = c;
    }
  }
  if (std::abs(best - 1.0) > tol)
    throw NotInGroupError("operator is not a tensor Weyl-Heisenberg element (no monomial row)");
  const std::complex<double> phase = x.mat(0, c0);
  const std::vector<std::int64_t> b = unflatten(c0, dims.dims);

  // Clock exponents a_i from the phase ratio along the shifted pattern.
  std::vector<std::int64_t> a(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t ni = dims.dims[i];
    std::vector<std::int64_t> row_digits(k, 0), col_digits = b;
    row_digits[i] = 1;
    col_digits[i] = (b[i] + 1) % ni;
    const std::complex<double> ratio =
        x.mat(flatten(row_digits, dims.dims), flatten(col_digits, dims.dims)) / phase;
    if (std::abs(std::abs(ratio) - 1.0) > tol)
      throw NotInGroupError("operator is not a tensor Weyl-Heisenberg element (pattern broken)");
    const double angle = std::arg(ratio);
    a[i] = floormod(std::llround(angle * static_cast<double>(ni) / (2.0 * 3.14159265358979323846)), ni);
  }

  // Full verification against the reconstructed monomial.
  for (std::int64_t r = 0; r < n; ++r) {
    const std::vector<std::int64_t> rd = unflatten(r, dims.dims);
    std::vector<std::int64_t> cd(k);
    std::complex<double> val = phase;
    for (std::size_t i = 0; i < k; ++i) {
      cd[i] = (rd[i] + b[i]) % dims.dims[i];
      val *= omega_power(dims.dims[i], a[i] * rd[i]);
    }
    const std::int64_t ce = flatten(cd, dims.dims);
    for (std::int64_t c = 0; c < n; ++c) {
      const std::complex<double> want = c == ce ? val : std::complex<double>{0.0, 0.0};
      if (std::abs(x.mat(r, c) - want) > tol)
        throw NotInGroupError("operator is not a tensor Weyl-Heisenberg element up to phase");
    }
  }

  std::vector<std::int64_t> coords(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    coords[2 * i] = b[i];      // P exponent
    coords[2 * i + 1] = a[i];  // Q exponent
  }
  return coords;
}

BlockMatrix extract_block_matrix(const DenseUnitary& x, const DimList& dims) {
  const std::int64_t n = dims.total_dim();
  if (x.dim() != n) throw std::invalid_argument("extract_block_matrix: dimension mismatch");
  const std::int64_t size = 2 * static_cast<std::int64_t>(dims.factors());
  std::vector<std::int64_t> entries(size * size, 0);
  for (std::int64_t m = 0; m < size; ++m) {
    const std::int64_t t = m / 2 + 1;
    const std::int64_t nt = dims.dims[t - 1];
    const DenseUnitary gen = embed_factor(dims, t, m % 2 == 0 ? pauli_p(nt) : pauli_q(nt));
    const std::vector<std::int64_t> col = extract_tensor_wh(ad_action(x, gen), dims);
    for (std::int64_t r = 0; r < size; ++r) entries[r * size + m] = col[r];
  }
  BlockMatrix out = block_matrix(dims, std::move(entries));
  if (!is_symplectic(out))
    throw std::runtime_error("extract_block_matrix: extracted matrix is not symplectic");
  return out;
}

BlockMatrix fourier_pattern(const DimList& dims, std::size_t t) {
  BlockMatrix h = block_identity(dims);
  const std::int64_t n = dims.dims[t];
  const std::int64_t p = 2 * static_cast<std::int64_t>(t);
  // Ad_S: P -> Q, Q -> P^-1
  h.at(p, p) = 0;
  h.at(p, p + 1) = floormod(-1, n);
  h.at(p + 1, p) = 1;
  h.at(p + 1, p + 1) = 0;
  return h;
}

BlockMatrix phase_pattern(const DimList& dims, std::size_t t) {
  BlockMatrix h = block_identity(dims);
  const std::int64_t p = 2 * static_cast<std::int64_t>(t);
  // Ad_D: P -> QP, Q -> Q
  h.at(p + 1, p) = 1;
  return h;
}

BlockMatrix couple_pattern(const DimList& dims, std::size_t i, std::size_t j, bool inverse) {
  if (i >= j || j >= dims.factors()) throw std::invalid_argument("couple_pattern: need i < j < k");
  BlockMatrix h = block_identity(dims);
  const std::int64_t ni = dims.dims[i], nj = dims.dims[j];
  const std::int64_t g = gcd64(ni, nj);
  const std::int64_t sign = inverse ? 1 : -1;
  // Ad_R: P_i -> P_i Q_j^(-nj/g), P_j -> Q_i^(-ni/g) P_j, Q's fixed.
  h.at(2 * static_cast<std::int64_t>(i) + 1, 2 * static_cast<std::int64_t>(j)) =
      floormod(sign * (ni / g), ni);
  h.at(2 * static_cast<std::int64_t>(j) + 1, 2 * static_cast<std::int64_t>(i)) =
      floormod(sign * (nj / g), nj);
  return h;
}

std::vector<BlockMatrix> sp_generators(const DimList& dims) {
  const std::size_t k = dims.factors();
  std::vector<BlockMatrix> gens;
  if (dims.total_dim() <= kDenseOracleGuard) {
    for (std::size_t t = 0; t < k; ++t) {
      const std::int64_t nt = dims.dims[t];
      gens.push_back(extract_block_matrix(embed_factor(dims, t + 1, build_S(nt)), dims));
      gens.push_back(extract_block_matrix(embed_factor(dims, t + 1, build_D(nt)), dims));
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        gens.push_back(extract_block_matrix(build_R(dims, i + 1, j + 1), dims));
  } else {
    for (std::size_t t = 0; t < k; ++t) {
      gens.push_back(fourier_pattern(dims, t));
      gens.push_back(phase_pattern(dims, t));
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) gens.push_back(couple_pattern(dims, i, j));
  }
  return gens;
}

namespace {

std::string pack_key(const BlockMatrix& h) {
  std::string key(h.m.size() * 2, '\0');
  for (std::size_t e = 0; e < h.m.size(); ++e) {
    const std::int64_t v = h.m[e];
    key[2 * e] = static_cast<char>(v & 0xff);
    key[2 * e + 1] = static_cast<char>((v >> 8) & 0xff);
  }
  return key;
}

BlockMatrix unpack_key(const std::string& key, const DimList& dims) {
  BlockMatrix h{dims, std::vector<std::int64_t>(key.size() / 2, 0)};
  for (std::size_t e = 0; e < h.m.size(); ++e) {
    h.m[e] = static_cast<std::int64_t>(static_cast<unsigned char>(key[2 * e])) |
             (static_cast<std::int64_t>(static_cast<unsigned char>(key[2 * e + 1])) << 8);
  }
  return h;
}

}  // namespace

std::size_t sp_closure(const DimList& dims, std::size_t guard) {
  for (std::int64_t d : dims.dims)
    if (d > 0xffff) throw std::invalid_argument("sp_closure: factor dimension too large");
  const std::vector<BlockMatrix> gens = sp_generators(dims);

  std::unordered_set<std::string> seen;
  std::deque<std::string> work;
  for (const auto& g : gens) {
    std::string key = pack_key(g);
    if (seen.insert(key).second) work.push_back(std::move(key));
  }
  while (!work.empty()) {
    const BlockMatrix cur = unpack_key(work.front(), dims);
    work.pop_front();
    for (const auto& g : gens) {
      std::string key = pack_key(block_mul(cur, g));
      if (!seen.contains(key)) {
        if (seen.size() >= guard)
          throw GuardExceededError("sp_closure: closure exceeds guard of " + std::to_string(guard));
        seen.insert(key);
        work.push_back(std::move(key));
      }
    }
  }
  return seen.size();
}

std::string SymmetryFactor::display() const {
  switch (kind) {
    case Kind::SL2:
      return "SL(2,Z_" + std::to_string(local_dims.front()) + ")";
    case Kind::Sp2k:
      return "Sp(" + std::to_string(2 * local_dims.size()) + ",Z_" +
             std::to_string(local_dims.front()) + ")";
    case Kind::SpMixed: {
      std::string out = "Sp_[";
      for (std::size_t i = 0; i < local_dims.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(local_dims[i]);
      }
      return out + "]";
    }
  }
  return {};
}

bool operator==(const SymmetryFactor& a, const SymmetryFactor& b) {
  return a.kind == b.kind && a.prime == b.prime && a.local_dims == b.local_dims;
}

std::vector<SymmetryFactor> decompose_symmetry(const DimList& dims) {
  std::vector<SymmetryFactor> out;
  for (DivisorBlock& block : elementary_divisor_blocks(dims.dims)) {
    SymmetryFactor f;
    f.prime = block.prime;
    f.local_dims = std::move(block.local_dims);
    std::sort(f.local_dims.begin(), f.local_dims.end());
    if (f.local_dims.size() == 1) {
      f.kind = SymmetryFactor::Kind::SL2;
    } else if (f.local_dims.front() == f.local_dims.back()) {
      f.kind = SymmetryFactor::Kind::Sp2k;
    } else {
      f.kind = SymmetryFactor::Kind::SpMixed;
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::string factors_display(const std::vector<SymmetryFactor>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    out += factors[i].display();
  }
  return out;
}

std::int64_t sp2k_order(std::int64_t k, std::int64_t n) {
  if (k < 1) throw std::invalid_argument("sp2k_order: k must be >= 1");
  if (n < 2) throw std::invalid_argument("sp2k_order: modulus must be >= 2");
  // multiplicative over prime powers: p^((e-1)k(2k+1)) p^(k^2) prod_{i<=k} (p^(2i)-1)
  std::int64_t order = 1;
  for (auto [p, e] : factorize(n).factors) {
    std::int64_t local = 1;
    for (std::int64_t x = 0; x < (e - 1) * k * (2 * k + 1) + k * k; ++x) local *= p;
    std::int64_t p2i = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
      p2i *= p * p;
      local *= p2i - 1;
    }
    order *= local;
  }
  return order;
}

bool GeneratorCheckReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

GeneratorCheckReport verify_generator_conjugation(const DimList& dims) {
  if (dims.total_dim() > kDenseOracleGuard)
    throw std::invalid_argument("verify_generator_conjugation: total dimension exceeds the dense guard of " +
                                std::to_string(kDenseOracleGuard));
  const std::size_t k = dims.factors();

  std::vector<std::pair<std::string, DenseUnitary>> gens;
  for (std::size_t t = 0; t < k; ++t) {
    const std::int64_t nt = dims.dims[t];
    gens.emplace_back("S_" + std::to_string(t + 1), embed_factor(dims, t + 1, build_S(nt)));
    gens.emplace_back("D_" + std::to_string(t + 1), embed_factor(dims, t + 1, build_D(nt)));
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      gens.emplace_back("R_" + std::to_string(i + 1) + "," + std::to_string(j + 1),
                        build_R(dims, i + 1, j + 1));

  std::vector<std::pair<std::string, DenseUnitary>> wh_gens;
  for (std::size_t t = 0; t < k; ++t) {
    const std::int64_t nt = dims.dims[t];
    wh_gens.emplace_back("P_" + std::to_string(t + 1), embed_factor(dims, t + 1, pauli_p(nt)));
    wh_gens.emplace_back("Q_" + std::to_string(t + 1), embed_factor(dims, t + 1, pauli_q(nt)));
  }

  GeneratorCheckReport report;
  for (const auto& [gname, g] : gens) {
    for (const auto& [aname, a] : wh_gens) {
      bool pass = true;
      try {
        extract_tensor_wh(ad_action(g, a), dims);
      } catch (const NotInGroupError&) {
        pass = false;
      }
      report.checks.push_back({"Ad_" + gname + "(" + aname + ") in tensor Weyl-Heisenberg group", pass});
    }
    bool symp = true;
    try {
      symp = is_symplectic(extract_block_matrix(g, dims));
    } catch (const std::exception&) {
      symp = false;
    }
    report.checks.push_back({"block image of " + gname + " is symplectic", symp});
  }
  return report;
}

}  // namespace cliffsym
