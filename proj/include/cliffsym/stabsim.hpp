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

#include <json.hpp>

#include "cliffsym/multipartite.hpp"

namespace cliffsym {

enum class GateKind { Fourier, Phase, PauliX, PauliZ, Couple, CoupleInv };

/// One circuit gate; factor indices are 1-based. Couple gates require
/// control < target; Pauli gates carry an integer power.
struct Gate {
  GateKind kind = GateKind::Fourier;
  std::int64_t target = 0;
  std::int64_t control = 0;
  std::int64_t power = 1;
};

std::string gate_kind_name(GateKind kind);
void validate_gate(const Gate& g, const DimList& dims);

struct Circuit {
  DimList dims;
  std::vector<Gate> gates;
};

Circuit make_circuit(DimList dims, std::vector<Gate> gates);

/// Accumulated symplectic action of a circuit on the phase-space coordinates
/// (P_1, Q_1, ..., P_k, Q_k).
struct Tableau {
  DimList dims;
  BlockMatrix matrix;
};

Tableau identity_tableau(const DimList& dims);
bool operator==(const Tableau& a, const Tableau& b);

/// Block image of a single gate. Fourier and phase gates embed their
/// single-factor action in block (t, t); Pauli gates act trivially on
/// cosets; couple gates are extracted once per (dims, control, target)
/// through the dense oracle when the total dimension allows and produced
/// analytically beyond it.
BlockMatrix gate_rep(const Gate& g, const DimList& dims);

/// Left-multiplies the tableau by the gate's block image. Gate images differ
/// from the identity in at most two row pairs, so this touches O(k) entries.
void apply_gate(Tableau& t, const Gate& g);

Tableau simulate(const Circuit& c);
/// Same, asserting tableau symplecticity after every gate.
Tableau simulate_checked(const Circuit& c);

/// Dense unitary of the whole circuit (later gates multiply on the left);
/// total dimension <= kDenseOracleGuard.
DenseUnitary circuit_unitary(const Circuit& c);

struct VerifyReport {
  bool match = false;
  std::string detail;  // first differing block when mismatched
};

/// Compares simulate(c) against the dense-oracle extraction of the full
/// circuit unitary, bit-exactly at coset level.
VerifyReport verify_vs_dense(const Circuit& c);
VerifyReport compare_tableaus(const Tableau& simulated, const BlockMatrix& extracted);

Circuit random_circuit(const DimList& dims, std::size_t gate_count, std::uint64_t seed);

std::uint64_t tableau_hash(const Tableau& t);

struct BenchReport {
  std::size_t gate_count = 0;
  double seconds = 0.0;
  double ns_per_gate = 0.0;
  std::uint64_t hash = 0;
};

/// Simulates a deterministic random circuit and reports wall time and
/// per-gate cost; cost is independent of the total Hilbert dimension.
BenchReport benchmark(const DimList& dims, std::size_t gate_count, std::uint64_t seed);

// Circuit JSON: {"dims": [n1, ...], "gates": [{"kind": "FOURIER"|"PHASE"|
// "X"|"Z"|"COUPLE"|"COUPLE_INV", "target": int, "control": int?, "power":
// int?}]} with 1-based factor indices.
Circuit circuit_from_json(const nlohmann::json& j);
Circuit circuit_from_json_text(const std::string& text);
nlohmann::ordered_json circuit_to_json(const Circuit& c);
nlohmann::ordered_json tableau_to_json(const Tableau& t);

}  // namespace cliffsym
