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
  \file orderfind.hpp
  \brief Semiclassical order finding with a single reused control qubit.

  The 2n-qubit inverse QFT of textbook phase estimation collapses to one
  control wire: 2n sequential stages each run H, C-U_{a^{2^j}} (exponents
  precomputed classically, j = 2n-1 down to 0), measurement-conditioned
  feedback rotations, H, measurement, and a conditioned reset of the control.
  The i-th measured bit lands at significance 2^i of the phase reading m,
  so phase = m / 2^{2n}.
*/

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "qshor/blocks.hpp"
#include "qshor/circuit.hpp"
#include "qshor/numtheory.hpp"
#include "qshor/simulator.hpp"

namespace qshor {

/// The 2n sequentially measured bits and the phase reading they encode.
struct MeasurementRecord {
  std::uint32_t n = 0;
  std::vector<std::uint8_t> bits;  // measurement order, bit i at significance 2^i
  std::uint64_t m = 0;
  double phase = 0.0;
};

/// Candidate order extracted from a record; validated means a^r = 1 (mod N).
struct OrderResult {
  std::optional<std::uint64_t> order;
  MeasurementRecord record;
  bool validated = false;
};

/*! \brief Total feedback rotation before the i-th final Hadamard, given the
  previously measured bits (earliest first):
  theta_i = -2*pi * sum_{k=1..i} bits[i-k] / 2^(k+1).
*/
inline double feedback_angle(std::span<const std::uint8_t> previous_bits) {
  double angle = 0.0;
  const std::size_t i = previous_bits.size();
  for (std::size_t k = 1; k <= i; ++k) {
    if (previous_bits[i - k]) {
      angle -= 2.0 * 3.14159265358979323846 * std::ldexp(1.0, -static_cast<int>(k + 1));
    }
  }
  return angle;
}

/// kmax used when none is requested: exact for n <= 8, ceil(lg n)+2 above.
inline std::uint32_t default_kmax(std::uint32_t n) {
  if (n <= 8) return n + 1;
  std::uint32_t k = 0;
  while ((std::uint32_t{1} << k) < n) ++k;  // ceil(lg n)
  return std::min(k + 2, n + 1);
}

/*! \brief Builds the full order-finding circuit on exactly 2n+3 qubits and
  2n classical bits: x register starts at |1>, b register, ancilla and the
  reused control start at |0>.

  The feedback rotation of stage i is emitted as one ClassicalPhase gate per
  previous bit k with angle -2*pi/2^(i-k+1); the gates that fire sum to
  feedback_angle of the measured prefix.
*/
inline Circuit build_order_finding_circuit(std::uint64_t N, std::uint64_t a,
                                           std::uint32_t kmax) {
  const std::uint32_t n = static_cast<std::uint32_t>(bit_length(N));
  detail::check_modulus(n, N);
  if (a <= 1 || a >= N) {
    throw std::invalid_argument("base must satisfy 1 < a < N");
  }
  if (gcd_u64(a, N) != 1) {
    throw std::invalid_argument("gcd(" + std::to_string(a) + ", " + std::to_string(N) +
                                ") = " + std::to_string(gcd_u64(a, N)) +
                                "; order finding needs a coprime base");
  }
  const std::uint32_t control = 2 * n + 2;
  const std::uint32_t stages = 2 * n;

  // a^(2^j) mod N for j = 0..2n-1 by successive squaring.
  std::vector<std::uint64_t> powers(stages);
  powers[0] = a % N;
  for (std::uint32_t j = 1; j < stages; ++j) {
    powers[j] = mod_exp(powers[j - 1], 2, N);
  }

  Circuit c(2 * n + 3, stages);
  c.add(Gate::x(0));  // x register := 1
  for (std::uint32_t i = 0; i < stages; ++i) {
    const std::uint32_t j = stages - 1 - i;
    c.add(Gate::h(control));
    c.append(build_controlled_ua(n, powers[j], N, kmax));
    for (std::uint32_t k = 0; k < i; ++k) {
      const int denom = static_cast<int>(i - k + 1);
      c.add(Gate::classical_phase(control, DyadicAngle::make(-1, denom), k));
    }
    c.add(Gate::h(control));
    c.add(Gate::measure(control, i));
    c.add(Gate::classical_x(control, i));
  }
  return c;
}

inline MeasurementRecord record_from_bits(std::uint32_t n, std::vector<std::uint8_t> bits) {
  MeasurementRecord rec;
  rec.n = n;
  rec.m = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) rec.m |= std::uint64_t{1} << i;
  }
  rec.phase = std::ldexp(static_cast<double>(rec.m), -static_cast<int>(bits.size()));
  rec.bits = std::move(bits);
  return rec;
}

inline MeasurementRecord run_semiclassical_order_finding(std::uint64_t N, std::uint64_t a,
                                                         std::uint32_t kmax, CountingRng& rng,
                                                         int workers = 1) {
  const Circuit c = build_order_finding_circuit(N, a, kmax);
  RunResult result = run_circuit(c, init_basis_state(c.num_qubits, 0), rng, workers);
  return record_from_bits(static_cast<std::uint32_t>(bit_length(N)), std::move(result.clbits));
}

/*! \brief Continued-fraction postprocessing: expands m/2^(2n) and accepts the
  first convergent denominator q < N with a^q = 1 (mod N). Absence is a value,
  not an error — callers retry with a fresh run.
*/
inline OrderResult phase_to_order(const MeasurementRecord& record, std::uint64_t N,
                                  std::uint64_t a) {
  OrderResult result;
  result.record = record;
  const std::uint64_t den = std::uint64_t{1} << record.bits.size();
  if (record.m >= den) throw std::invalid_argument("phase reading out of range");
  for (const auto& [p, q] : continued_fraction_convergents(record.m, den)) {
    if (q < 1 || q >= N) continue;
    if (mod_exp(a, q, N) == 1) {
      result.order = q;
      result.validated = true;
      break;
    }
  }
  return result;
}

inline nlohmann::json order_result_to_json(const OrderResult& r) {
  nlohmann::json j;
  j["bits"] = r.record.bits;
  j["m"] = r.record.m;
  j["phase"] = r.record.phase;
  if (r.order) {
    j["r"] = *r.order;
  } else {
    j["r"] = nullptr;
  }
  j["validated"] = r.validated;
  return j;
}

}  // namespace qshor
