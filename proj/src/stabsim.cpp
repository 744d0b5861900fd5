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

#include "cliffsym/stabsim.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <tuple>

namespace cliffsym {

std::string gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::Fourier: return "FOURIER";
    case GateKind::Phase: return "PHASE";
    case GateKind::PauliX: return "X";
    case GateKind::PauliZ: return "Z";
    case GateKind::Couple: return "COUPLE";
    case GateKind::CoupleInv: return "COUPLE_INV";
  }
  return "?";
}

void validate_gate(const Gate& g, const DimList& dims) {
  const std::int64_t k = static_cast<std::int64_t>(dims.factors());
  if (g.target < 1 || g.target > k)
    throw std::invalid_argument("gate target index out of range (1-based)");
  if (g.kind == GateKind::Couple || g.kind == GateKind::CoupleInv) {
    if (g.control < 1 || g.control > k)
      throw std::invalid_argument("couple gate control index out of range (1-based)");
    if (g.control >= g.target)
      throw std::invalid_argument("couple gate requires control < target");
  }
}

Circuit make_circuit(DimList dims, std::vector<Gate> gates) {
  for (const Gate& g : gates) validate_gate(g, dims);
  return {std::move(dims), std::move(gates)};
}

Tableau identity_tableau(const DimList& dims) { return {dims, block_identity(dims)}; }

bool operator==(const Tableau& a, const Tableau& b) {
  return a.dims == b.dims && a.matrix == b.matrix;
}

namespace {

struct CoupleRep {
  BlockMatrix mat;
  // rows differing from the identity, with their nonzero columns
  std::vector<std::pair<std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>>> delta_rows;
};

CoupleRep make_couple_rep(BlockMatrix mat) {
  CoupleRep rep{std::move(mat), {}};
  const std::int64_t size = rep.mat.size();
  for (std::int64_t r = 0; r < size; ++r) {
    bool identity_row = true;
    for (std::int64_t c = 0; c < size; ++c) {
      if (rep.mat.at(r, c) != (r == c ? 1 : 0)) {
        identity_row = false;
        break;
      }
    }
    if (identity_row) continue;
    std::vector<std::pair<std::int64_t, std::int64_t>> cols;
    for (std::int64_t c = 0; c < size; ++c)
      if (rep.mat.at(r, c) != 0) cols.emplace_back(c, rep.mat.at(r, c));
    rep.delta_rows.emplace_back(r, std::move(cols));
  }
  return rep;
}

const CoupleRep& couple_rep_cached(const DimList& dims, std::int64_t i, std::int64_t j, bool inverse) {
  using Key = std::tuple<std::vector<std::int64_t>, std::int64_t, std::int64_t, bool>;
  static std::mutex mu;
  static std::map<Key, CoupleRep> cache;
  Key key{dims.dims, i, j, inverse};
  std::scoped_lock lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  BlockMatrix mat = [&] {
    if (dims.total_dim() <= kDenseOracleGuard) {
      const DenseUnitary r = build_R(dims, i + 1, j + 1);
      const DenseUnitary u = inverse ? DenseUnitary(r.mat.adjoint(), r.tol) : r;
      return extract_block_matrix(u, dims);
    }
    return couple_pattern(dims, static_cast<std::size_t>(i), static_cast<std::size_t>(j), inverse);
  }();
  return cache.emplace(std::move(key), make_couple_rep(std::move(mat))).first->second;
}

}  // namespace

BlockMatrix gate_rep(const Gate& g, const DimList& dims) {
  validate_gate(g, dims);
  switch (g.kind) {
    case GateKind::Fourier:
      return fourier_pattern(dims, static_cast<std::size_t>(g.target - 1));
    case GateKind::Phase:
      return phase_pattern(dims, static_cast<std::size_t>(g.target - 1));
    case GateKind::PauliX:
    case GateKind::PauliZ:
      return block_identity(dims);  // Ad of a Pauli fixes all cosets
    case GateKind::Couple:
      return couple_rep_cached(dims, g.control - 1, g.target - 1, false).mat;
    case GateKind::CoupleInv:
      return couple_rep_cached(dims, g.control - 1, g.target - 1, true).mat;
  }
  throw std::invalid_argument("unknown gate kind");
}

void apply_gate(Tableau& t, const Gate& g) {
  validate_gate(g, t.dims);
  BlockMatrix& m = t.matrix;
  const std::int64_t size = m.size();
  switch (g.kind) {
    case GateKind::Fourier: {
      const std::int64_t p = 2 * (g.target - 1), q = p + 1;
      const std::int64_t n = t.dims.dims[g.target - 1];
      for (std::int64_t c = 0; c < size; ++c) {
        const std::int64_t old_p = m.at(p, c);
        m.at(p, c) = floormod(-m.at(q, c), n);
        m.at(q, c) = old_p;
      }
      return;
    }
    case GateKind::Phase: {
      const std::int64_t p = 2 * (g.target - 1), q = p + 1;
      const std::int64_t n = t.dims.dims[g.target - 1];
      for (std::int64_t c = 0; c < size; ++c) m.at(q, c) = floormod(m.at(q, c) + m.at(p, c), n);
      return;
    }
    case GateKind::PauliX:
    case GateKind::PauliZ:
      return;
    case GateKind::Couple:
    case GateKind::CoupleInv: {
      const CoupleRep& rep = couple_rep_cached(t.dims, g.control - 1, g.target - 1,
                                               g.kind == GateKind::CoupleInv);
      // new rows first, then write back: delta rows may reference each other
      std::vector<std::vector<std::int64_t>> new_rows;
      new_rows.reserve(rep.delta_rows.size());
      for (const auto& [r, cols] : rep.delta_rows) {
        const std::int64_t mod = m.row_modulus(r);
        std::vector<std::int64_t> row(size, 0);
        for (const auto& [c, coeff] : cols)
          for (std::int64_t x = 0; x < size; ++x) row[x] = floormod(row[x] + coeff * m.at(c, x), mod);
        new_rows.push_back(std::move(row));
      }
      for (std::size_t d = 0; d < rep.delta_rows.size(); ++d) {
        const std::int64_t r = rep.delta_rows[d].first;
        for (std::int64_t x = 0; x < size; ++x) m.at(r, x) = new_rows[d][x];
      }
      return;
    }
  }
}

Tableau simulate(const Circuit& c) {
  Tableau t = identity_tableau(c.dims);
  for (const Gate& g : c.gates) apply_gate(t, g);
  return t;
}

Tableau simulate_checked(const Circuit& c) {
  Tableau t = identity_tableau(c.dims);
  for (const Gate& g : c.gates) {
    apply_gate(t, g);
    if (!is_symplectic(t.matrix))
      throw std::runtime_error("tableau lost symplecticity after gate " + gate_kind_name(g.kind));
  }
  return t;
}

DenseUnitary circuit_unitary(const Circuit& c) {
  const std::int64_t n = c.dims.total_dim();
  if (n > kDenseOracleGuard)
    throw std::invalid_argument("circuit_unitary: total dimension exceeds the dense guard of " +
                                std::to_string(kDenseOracleGuard));
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
  for (const Gate& g : c.gates) {
    const std::int64_t nt = c.dims.dims[g.target - 1];
    DenseUnitary gd = [&]() -> DenseUnitary {
      switch (g.kind) {
        case GateKind::Fourier:
          return embed_factor(c.dims, g.target, build_S(nt));
        case GateKind::Phase:
          return embed_factor(c.dims, g.target, build_D(nt));
        case GateKind::PauliX:
          return embed_factor(c.dims, g.target, to_dense(wh_element(wh_context(nt), 0, 0, g.power)));
        case GateKind::PauliZ:
          return embed_factor(c.dims, g.target, to_dense(wh_element(wh_context(nt), 0, g.power, 0)));
        case GateKind::Couple:
          return build_R(c.dims, g.control, g.target);
        case GateKind::CoupleInv: {
          const DenseUnitary r = build_R(c.dims, g.control, g.target);
          return DenseUnitary(r.mat.adjoint(), r.tol);
        }
      }
      throw std::invalid_argument("unknown gate kind");
    }();
    u = gd.mat * u;  // later gates act on the left
  }
  return DenseUnitary(std::move(u));
}

VerifyReport compare_tableaus(const Tableau& simulated, const BlockMatrix& extracted) {
  if (simulated.matrix == extracted) return {true, ""};
  const std::int64_t k = static_cast<std::int64_t>(simulated.dims.factors());
  for (std::int64_t i = 0; i < k; ++i) {
    for (std::int64_t j = 0; j < k; ++j) {
      for (std::int64_t r = 0; r < 2; ++r) {
        for (std::int64_t c = 0; c < 2; ++c) {
          const std::int64_t a = simulated.matrix.at(2 * i + r, 2 * j + c);
          const std::int64_t b = extracted.at(2 * i + r, 2 * j + c);
          if (a != b) {
            return {false, "first difference at block (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + "): simulated " + std::to_string(a) +
                               ", extracted " + std::to_string(b)};
          }
        }
      }
    }
  }
  return {false, "dimension mismatch"};
}

VerifyReport verify_vs_dense(const Circuit& c) {
  const BlockMatrix extracted = extract_block_matrix(circuit_unitary(c), c.dims);
  return compare_tableaus(simulate(c), extracted);
}

Circuit random_circuit(const DimList& dims, std::size_t gate_count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::int64_t k = static_cast<std::int64_t>(dims.factors());
  const int kinds = k >= 2 ? 6 : 4;
  std::uniform_int_distribution<int> kind_dist(0, kinds - 1);
  std::uniform_int_distribution<std::int64_t> factor_dist(1, k);
  std::vector<Gate> gates;
  gates.reserve(gate_count);
  for (std::size_t g = 0; g < gate_count; ++g) {
    Gate gate;
    switch (kind_dist(rng)) {
      case 0: gate.kind = GateKind::Fourier; break;
      case 1: gate.kind = GateKind::Phase; break;
      case 2: gate.kind = GateKind::PauliX; break;
      case 3: gate.kind = GateKind::PauliZ; break;
      case 4: gate.kind = GateKind::Couple; break;
      default: gate.kind = GateKind::CoupleInv; break;
    }
    if (gate.kind == GateKind::Couple || gate.kind == GateKind::CoupleInv) {
      std::uniform_int_distribution<std::int64_t> ctrl_dist(1, k - 1);
      gate.control = ctrl_dist(rng);
      std::uniform_int_distribution<std::int64_t> tgt_dist(gate.control + 1, k);
      gate.target = tgt_dist(rng);
    } else {
      gate.target = factor_dist(rng);
      if (gate.kind == GateKind::PauliX || gate.kind == GateKind::PauliZ) {
        std::uniform_int_distribution<std::int64_t> pow_dist(0, dims.dims[gate.target - 1] - 1);
        gate.power = pow_dist(rng);
      }
    }
    gates.push_back(gate);
  }
  return make_circuit(dims, std::move(gates));
}

std::uint64_t tableau_hash(const Tableau& t) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (std::int64_t d : t.dims.dims) mix(static_cast<std::uint64_t>(d));
  for (std::int64_t e : t.matrix.m) mix(static_cast<std::uint64_t>(e));
  return h;
}

BenchReport benchmark(const DimList& dims, std::size_t gate_count, std::uint64_t seed) {
  const Circuit c = random_circuit(dims, gate_count, seed);
  const auto start = std::chrono::steady_clock::now();
  const Tableau t = simulate(c);
  const auto stop = std::chrono::steady_clock::now();
  BenchReport report;
  report.gate_count = gate_count;
  report.seconds = std::chrono::duration<double>(stop - start).count();
  report.ns_per_gate = gate_count == 0 ? 0.0 : report.seconds * 1e9 / static_cast<double>(gate_count);
  report.hash = tableau_hash(t);
  return report;
}

namespace {

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "FOURIER") return GateKind::Fourier;
  if (name == "PHASE") return GateKind::Phase;
  if (name == "X") return GateKind::PauliX;
  if (name == "Z") return GateKind::PauliZ;
  if (name == "COUPLE") return GateKind::Couple;
  if (name == "COUPLE_INV") return GateKind::CoupleInv;
  throw std::invalid_argument("unknown gate kind \"" + name +
                              "\" (expected FOURIER, PHASE, X, Z, COUPLE or COUPLE_INV)");
}

}  // namespace

Circuit circuit_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("gates"))
    throw std::invalid_argument("circuit JSON must be an object with \"dims\" and \"gates\"");
  if (!j["dims"].is_array() || j["dims"].empty())
    throw std::invalid_argument("circuit \"dims\" must be a nonempty array of integers");
  std::vector<std::int64_t> dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer()) throw std::invalid_argument("circuit \"dims\" entries must be integers");
    dims.push_back(d.get<std::int64_t>());
  }
  if (!j["gates"].is_array()) throw std::invalid_argument("circuit \"gates\" must be an array");
  std::vector<Gate> gates;
  for (const auto& gj : j["gates"]) {
    if (!gj.is_object() || !gj.contains("kind") || !gj["kind"].is_string())
      throw std::invalid_argument("each gate must be an object with a string \"kind\"");
    Gate g;
    g.kind = gate_kind_from_name(gj["kind"].get<std::string>());
    if (!gj.contains("target") || !gj["target"].is_number_integer())
      throw std::invalid_argument("each gate must carry an integer \"target\" (1-based)");
    g.target = gj["target"].get<std::int64_t>();
    if (gj.contains("control")) {
      if (!gj["control"].is_number_integer())
        throw std::invalid_argument("gate \"control\" must be an integer (1-based)");
      g.control = gj["control"].get<std::int64_t>();
    } else if (g.kind == GateKind::Couple || g.kind == GateKind::CoupleInv) {
      throw std::invalid_argument("couple gates require a \"control\" index");
    }
    if (gj.contains("power")) {
      if (!gj["power"].is_number_integer()) throw std::invalid_argument("gate \"power\" must be an integer");
      g.power = gj["power"].get<std::int64_t>();
    }
    gates.push_back(g);
  }
  return make_circuit(dim_list(std::move(dims)), std::move(gates));
}

Circuit circuit_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("circuit JSON parse error: ") + e.what());
  }
  return circuit_from_json(j);
}

nlohmann::ordered_json circuit_to_json(const Circuit& c) {
  nlohmann::ordered_json j;
  j["dims"] = c.dims.dims;
  j["gates"] = nlohmann::ordered_json::array();
  for (const Gate& g : c.gates) {
    nlohmann::ordered_json gj;
    gj["kind"] = gate_kind_name(g.kind);
    gj["target"] = g.target;
    if (g.kind == GateKind::Couple || g.kind == GateKind::CoupleInv) gj["control"] = g.control;
    if (g.kind == GateKind::PauliX || g.kind == GateKind::PauliZ) gj["power"] = g.power;
    j["gates"].push_back(std::move(gj));
  }
  return j;
}

nlohmann::ordered_json tableau_to_json(const Tableau& t) {
  nlohmann::ordered_json j;
  j["dims"] = t.dims.dims;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  const std::int64_t size = t.matrix.size();
  for (std::int64_t r = 0; r < size; ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::int64_t c = 0; c < size; ++c) row.push_back(t.matrix.at(r, c));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

}  // namespace cliffsym
