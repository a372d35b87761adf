// Copyright 2026 The qshor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*!
  \file circuit.hpp
  \brief Circuit container plus inversion, control extension, composition,
         greedy depth and per-kind gate accounting.
*/

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qshor/gate.hpp"

namespace qshor {

namespace detail {

inline void check_disjoint(const Gate& g) {
  for (auto t : g.targets) {
    for (auto c : g.controls) {
      if (t == c) {
        throw std::invalid_argument("gate targets and controls overlap on qubit " +
                                    std::to_string(t));
      }
    }
  }
  if (g.targets.size() == 2 && g.targets[0] == g.targets[1]) {
    throw std::invalid_argument("gate targets repeat qubit " + std::to_string(g.targets[0]));
  }
  if (g.controls.size() == 2 && g.controls[0] == g.controls[1]) {
    throw std::invalid_argument("gate controls repeat qubit " + std::to_string(g.controls[0]));
  }
}

}  // namespace detail

/// Ordered gate sequence over num_qubits wires and num_clbits classical bits.
/// Validation happens on add(); instances are treated as immutable once built
/// and are safe to share across threads for reading.
struct Circuit {
  std::uint32_t num_qubits = 0;
  std::uint32_t num_clbits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(std::uint32_t qubits, std::uint32_t clbits = 0)
      : num_qubits(qubits), num_clbits(clbits) {
    if (qubits == 0) throw std::invalid_argument("circuit needs at least one qubit");
  }

  void add(Gate g) {
    if (g.targets.size() != kind_target_count(g.kind) ||
        g.controls.size() != kind_control_count(g.kind)) {
      throw std::invalid_argument(std::string("bad arity for gate kind ") +
                                  std::string(gate_kind_name(g.kind)));
    }
    if (g.angle.has_value() != is_phase_kind(g.kind)) {
      throw std::invalid_argument(std::string(gate_kind_name(g.kind)) +
                                  (g.angle ? " must not carry an angle" : " requires an angle"));
    }
    const bool needs_condition =
        g.kind == GateKind::ClassicalX || g.kind == GateKind::ClassicalPhase;
    if (g.condition.has_value() != needs_condition) {
      throw std::invalid_argument(std::string(gate_kind_name(g.kind)) +
                                  ": classical condition mismatch");
    }
    if (g.clbit.has_value() != (g.kind == GateKind::Measure)) {
      throw std::invalid_argument(std::string(gate_kind_name(g.kind)) +
                                  ": classical destination mismatch");
    }
    for (auto q : g.targets) check_qubit(q);
    for (auto q : g.controls) check_qubit(q);
    if (g.condition) check_clbit(*g.condition);
    if (g.clbit) check_clbit(*g.clbit);
    detail::check_disjoint(g);
    gates.push_back(std::move(g));
  }

  /// Appends `other`, relocating its wires through `qubit_map` (and classical
  /// bits through `clbit_map` when present). The map must be injective.
  void append(const Circuit& other, std::span<const std::uint32_t> qubit_map,
              std::span<const std::uint32_t> clbit_map = {}) {
    if (qubit_map.size() != other.num_qubits) {
      throw std::invalid_argument("qubit map size does not match appended circuit");
    }
    if (!clbit_map.empty() && clbit_map.size() != other.num_clbits) {
      throw std::invalid_argument("clbit map size does not match appended circuit");
    }
    for (std::size_t i = 0; i < qubit_map.size(); ++i) {
      for (std::size_t j = i + 1; j < qubit_map.size(); ++j) {
        if (qubit_map[i] == qubit_map[j]) {
          throw std::invalid_argument("qubit map is not injective");
        }
      }
    }
    for (const Gate& g : other.gates) {
      Gate mapped = g;
      for (auto& q : mapped.targets) q = qubit_map[q];
      for (auto& q : mapped.controls) q = qubit_map[q];
      if (!clbit_map.empty()) {
        if (mapped.condition) mapped.condition = clbit_map[*mapped.condition];
        if (mapped.clbit) mapped.clbit = clbit_map[*mapped.clbit];
      }
      add(std::move(mapped));
    }
  }

  /// Appends `other` onto the same wire indices.
  void append(const Circuit& other) {
    std::vector<std::uint32_t> identity(other.num_qubits);
    for (std::uint32_t q = 0; q < other.num_qubits; ++q) identity[q] = q;
    append(other, identity);
  }

  /// False if the circuit measures or classically conditions any gate.
  bool is_unitary() const {
    return std::none_of(gates.begin(), gates.end(),
                        [](const Gate& g) { return is_nonunitary_kind(g.kind); });
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void check_qubit(std::uint32_t q) const {
    if (q >= num_qubits) {
      throw std::invalid_argument("qubit index " + std::to_string(q) +
                                  " out of range for " + std::to_string(num_qubits) +
                                  "-qubit circuit");
    }
  }
  void check_clbit(std::uint32_t c) const {
    if (c >= num_clbits) {
      throw std::invalid_argument("classical bit index " + std::to_string(c) +
                                  " out of range for " + std::to_string(num_clbits) +
                                  " classical bits");
    }
  }
};

/// Gate-wise inverse in reverse order: phase angles negated, self-inverse
/// kinds unchanged. Rejects non-unitary circuits.
inline Circuit invert_circuit(const Circuit& c) {
  if (!c.is_unitary()) {
    throw std::invalid_argument(
        "cannot invert a non-unitary circuit (it contains Measure or "
        "classically conditioned gates)");
  }
  Circuit inv(c.num_qubits, c.num_clbits);
  inv.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    Gate g = *it;
    if (g.angle) g.angle = g.angle->negated();
    inv.add(std::move(g));
  }
  return inv;
}

/*! \brief Extends every gate of a unitary circuit by the given control qubits.

  Phase promotes to CPhase to CCPhase and X to CNOT to Toffoli (Swap to
  CSwap); the result acts as the identity whenever any added control reads 0.
  Controls must be fresh wires (not touched by any existing gate), and the
  promoted control count may not exceed the two-control gate-set ceiling —
  callers hit by that restructure, controlling only the phase-gate core.
*/
inline Circuit add_controls(const Circuit& c, std::span<const std::uint32_t> ctrls) {
  if (!c.is_unitary()) {
    throw std::invalid_argument("cannot add controls to a non-unitary circuit");
  }
  for (std::size_t i = 0; i < ctrls.size(); ++i) {
    for (std::size_t j = i + 1; j < ctrls.size(); ++j) {
      if (ctrls[i] == ctrls[j]) throw std::invalid_argument("duplicate control qubit");
    }
  }
  std::uint32_t width = c.num_qubits;
  for (auto q : ctrls) width = std::max(width, q + 1);
  for (const Gate& g : c.gates) {
    for (auto q : g.targets) {
      for (auto ctl : ctrls) {
        if (q == ctl)
          throw std::invalid_argument("control qubit " + std::to_string(ctl) +
                                      " already used by the circuit");
      }
    }
    for (auto q : g.controls) {
      for (auto ctl : ctrls) {
        if (q == ctl)
          throw std::invalid_argument("control qubit " + std::to_string(ctl) +
                                      " already used by the circuit");
      }
    }
  }

  Circuit out(width, c.num_clbits);
  if (ctrls.empty()) {
    out.gates = c.gates;
    return out;
  }
  for (const Gate& g : c.gates) {
    Gate promoted = g;
    const std::size_t total_controls = g.controls.size() + ctrls.size();
    if (total_controls > 2) {
      throw std::invalid_argument(std::string("cannot control a ") +
                                  std::string(gate_kind_name(g.kind)) +
                                  ": more than two controls are outside the gate set");
    }
    switch (g.kind) {
      case GateKind::Phase:
        promoted.kind = total_controls == 1 ? GateKind::CPhase : GateKind::CCPhase;
        break;
      case GateKind::CPhase:
        promoted.kind = GateKind::CCPhase;
        break;
      case GateKind::X:
        promoted.kind = total_controls == 1 ? GateKind::Cnot : GateKind::Toffoli;
        break;
      case GateKind::Cnot:
        promoted.kind = GateKind::Toffoli;
        break;
      case GateKind::Swap:
        promoted.kind = GateKind::CSwap;
        break;
      default:
        throw std::invalid_argument(std::string("no controlled form of ") +
                                    std::string(gate_kind_name(g.kind)) +
                                    " in the gate set");
    }
    promoted.controls.insert(promoted.controls.end(), ctrls.begin(), ctrls.end());
    out.add(std::move(promoted));
  }
  return out;
}

inline Circuit add_controls(const Circuit& c, std::initializer_list<std::uint32_t> ctrls) {
  return add_controls(c, std::span<const std::uint32_t>(ctrls.begin(), ctrls.size()));
}

/*! \brief Greedy as-soon-as-possible layer count.

  A gate occupies one layer on all its targets and controls; measurements and
  classically conditioned gates additionally occupy a single shared classical
  lane, which serializes the measurement-feedback part of a circuit.
*/
inline std::uint64_t circuit_depth(const Circuit& c) {
  std::vector<std::uint64_t> next_free(c.num_qubits + 1, 0);  // last slot: classical lane
  const std::size_t classical_lane = c.num_qubits;
  std::uint64_t depth = 0;
  for (const Gate& g : c.gates) {
    std::uint64_t layer = 0;
    auto visit = [&](std::size_t lane) { layer = std::max(layer, next_free[lane]); };
    for (auto q : g.targets) visit(q);
    for (auto q : g.controls) visit(q);
    const bool classical = is_nonunitary_kind(g.kind);
    if (classical) visit(classical_lane);
    for (auto q : g.targets) next_free[q] = layer + 1;
    for (auto q : g.controls) next_free[q] = layer + 1;
    if (classical) next_free[classical_lane] = layer + 1;
    depth = std::max(depth, layer + 1);
  }
  return depth;
}

/// Exact per-kind gate totals.
struct GateCounts {
  std::array<std::uint64_t, kNumGateKinds> by_kind{};

  std::uint64_t& operator[](GateKind k) { return by_kind[static_cast<std::size_t>(k)]; }
  std::uint64_t operator[](GateKind k) const { return by_kind[static_cast<std::size_t>(k)]; }

  std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (auto v : by_kind) sum += v;
    return sum;
  }

  std::map<std::string, std::uint64_t> named() const {
    std::map<std::string, std::uint64_t> out;
    for (std::size_t i = 0; i < kNumGateKinds; ++i) {
      if (by_kind[i] != 0) out[std::string(kGateKindNames[i])] = by_kind[i];
    }
    return out;
  }

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

inline GateCounts count_gates(const Circuit& c) {
  GateCounts counts;
  for (const Gate& g : c.gates) ++counts[g.kind];
  return counts;
}

}  // namespace qshor
