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
  \file simulator.hpp
  \brief Dense statevector execution with mid-circuit measurement, classical
         feedback, seeded reproducible sampling and brute-force unitaries.
*/

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qshor/circuit.hpp"

namespace qshor {

/*! \brief Seeded random source with a draw counter.

  One uniform draw decides each measurement (outcome 1 iff draw < P(1)), so
  equal seeds replay runs bit-for-bit. The uniform is built from the raw
  engine output instead of std::uniform_real_distribution, whose mapping is
  implementation-defined.
*/
class CountingRng {
 public:
  explicit CountingRng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [lo, hi] by rejection sampling.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t range = hi - lo + 1;
    if (range == 0) return next();  // full 64-bit range
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + x % range;
  }

  /// Raw engine outputs consumed so far (reproducibility audit).
  std::uint64_t draws() const { return draws_; }

 private:
  std::uint64_t next() {
    ++draws_;
    return engine_();
  }

  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

namespace detail {

/// Runs body(begin, end) over [0, total) split across workers. Each index is
/// written by exactly one worker, so results do not depend on the split.
template <typename Body>
void partition_indices(std::uint64_t total, int workers, Body&& body) {
  if (workers <= 1 || total < (std::uint64_t{1} << 11)) {
    body(std::uint64_t{0}, total);
    return;
  }
  const auto n = static_cast<std::uint64_t>(workers);
  std::vector<std::thread> threads;
  threads.reserve(n);
  for (std::uint64_t w = 0; w < n; ++w) {
    const std::uint64_t begin = total * w / n;
    const std::uint64_t end = total * (w + 1) / n;
    threads.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace detail

/// Normalized complex amplitude vector over the computational basis,
/// little-endian: qubit 0 is the least significant bit of a basis index.
class QuantumState {
 public:
  static constexpr std::uint32_t kMaxQubits = 28;  // 2n+3 <= 28 covers n <= 12

  QuantumState(std::uint32_t num_qubits, std::uint64_t basis_value)
      : num_qubits_(check_width(num_qubits)), amps_(std::uint64_t{1} << num_qubits) {
    if (basis_value >= amps_.size()) {
      throw std::invalid_argument("basis value " + std::to_string(basis_value) +
                                  " out of range for " + std::to_string(num_qubits) +
                                  " qubits");
    }
    amps_[basis_value] = 1.0;
  }

  /// Adopts raw amplitudes (normalization is the caller's concern; used by
  /// linear-algebra utilities, not by the run entry points).
  static QuantumState from_amplitudes(std::vector<std::complex<double>> amps) {
    std::uint32_t q = 0;
    while ((std::uint64_t{1} << q) < amps.size()) ++q;
    if ((std::uint64_t{1} << q) != amps.size()) {
      throw std::invalid_argument("amplitude vector length must be a power of two");
    }
    QuantumState s;
    s.num_qubits_ = check_width(q);
    s.amps_ = std::move(amps);
    return s;
  }

  std::uint32_t num_qubits() const { return num_qubits_; }
  std::uint64_t dimension() const { return amps_.size(); }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }
  std::vector<std::complex<double>>& raw() { return amps_; }

  std::complex<double> amplitude(std::uint64_t basis) const { return amps_.at(basis); }

  double norm_squared() const {
    double sum = 0.0;
    for (const auto& a : amps_) sum += std::norm(a);
    return sum;
  }

  /// Probability of reading 1 on `qubit`.
  double probability_one(std::uint32_t qubit) const {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    double p = 0.0;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
      if (i & bit) p += std::norm(amps_[i]);
    }
    return p;
  }

 private:
  QuantumState() = default;

  static std::uint32_t check_width(std::uint32_t q) {
    if (q == 0 || q > kMaxQubits) {
      throw std::invalid_argument("simulator supports 1.." + std::to_string(kMaxQubits) +
                                  " qubits, requested " + std::to_string(q));
    }
    return q;
  }

  std::uint32_t num_qubits_ = 0;
  std::vector<std::complex<double>> amps_;
};

inline QuantumState init_basis_state(std::uint32_t num_qubits, std::uint64_t value) {
  return QuantumState(num_qubits, value);
}

namespace detail {

using Amp = std::complex<double>;

inline std::uint64_t insert_zero_bit(std::uint64_t k, std::uint32_t pos) {
  const std::uint64_t low = k & ((std::uint64_t{1} << pos) - 1);
  return ((k >> pos) << (pos + 1)) | low;
}

inline void apply_x(std::vector<Amp>& a, std::uint32_t t, int workers) {
  const std::uint64_t bit = std::uint64_t{1} << t;
  partition_indices(a.size() >> 1, workers, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t k = begin; k < end; ++k) {
      const std::uint64_t i0 = insert_zero_bit(k, t);
      std::swap(a[i0], a[i0 | bit]);
    }
  });
}

inline void apply_h(std::vector<Amp>& a, std::uint32_t t, int workers) {
  constexpr double kInvSqrt2 = 0.70710678118654752440;
  const std::uint64_t bit = std::uint64_t{1} << t;
  partition_indices(a.size() >> 1, workers, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t k = begin; k < end; ++k) {
      const std::uint64_t i0 = insert_zero_bit(k, t);
      const Amp lo = a[i0];
      const Amp hi = a[i0 | bit];
      a[i0] = (lo + hi) * kInvSqrt2;
      a[i0 | bit] = (lo - hi) * kInvSqrt2;
    }
  });
}

// Phase kinds multiply amplitudes whose targeted (and controlling) bits all
// read 1; mask selection covers Phase/CPhase/CCPhase uniformly.
inline void apply_phase_mask(std::vector<Amp>& a, std::uint64_t mask, double radians,
                             int workers) {
  const Amp factor = std::polar(1.0, radians);
  partition_indices(a.size(), workers, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      if ((i & mask) == mask) a[i] *= factor;
    }
  });
}

inline void apply_controlled_x(std::vector<Amp>& a, std::uint64_t control_mask,
                               std::uint32_t t, int workers) {
  const std::uint64_t bit = std::uint64_t{1} << t;
  partition_indices(a.size() >> 1, workers, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t k = begin; k < end; ++k) {
      const std::uint64_t i0 = insert_zero_bit(k, t);
      if ((i0 & control_mask) == control_mask) std::swap(a[i0], a[i0 | bit]);
    }
  });
}

inline void apply_swap(std::vector<Amp>& a, std::uint32_t t1, std::uint32_t t2,
                       std::uint64_t control_mask, int workers) {
  const std::uint64_t b1 = std::uint64_t{1} << t1;
  const std::uint64_t b2 = std::uint64_t{1} << t2;
  partition_indices(a.size(), workers, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      // visit each pair once, from its (t1=1, t2=0) member
      if ((i & b1) && !(i & b2) && (i & control_mask) == control_mask) {
        std::swap(a[i], a[i ^ b1 ^ b2]);
      }
    }
  });
}

inline std::uint64_t bits_to_mask(std::span<const std::uint32_t> qubits) {
  std::uint64_t mask = 0;
  for (auto q : qubits) mask |= std::uint64_t{1} << q;
  return mask;
}

}  // namespace detail

/// Projective measurement: one uniform draw, Born probabilities, collapse and
/// renormalize. Returns the measured bit.
inline int measure_qubit(QuantumState& state, std::uint32_t qubit, CountingRng& rng,
                         int workers = 1) {
  if (qubit >= state.num_qubits()) throw std::invalid_argument("measured qubit out of range");
  auto& a = state.raw();
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  // Deterministic serial sums: the probabilities must not depend on workers.
  double p0 = 0.0, p1 = 0.0;
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    (i & bit ? p1 : p0) += std::norm(a[i]);
  }
  if (p0 < 1e-12 && p1 < 1e-12) {
    throw std::runtime_error("measurement found vanishing probability mass on both outcomes");
  }
  const int outcome = rng.uniform() < p1 / (p0 + p1) ? 1 : 0;
  const double kept = outcome ? p1 : p0;
  const double scale = 1.0 / std::sqrt(kept);
  const std::uint64_t want = outcome ? bit : 0;
  detail::partition_indices(a.size(), workers, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      if ((i & bit) == want) {
        a[i] *= scale;
      } else {
        a[i] = 0.0;
      }
    }
  });
  return outcome;
}

/// Applies one gate. Measure consumes the rng and writes clbits; conditioned
/// gates read clbits.
inline void apply_gate(QuantumState& state, const Gate& g, std::vector<std::uint8_t>& clbits,
                       CountingRng* rng = nullptr, int workers = 1) {
  auto& a = state.raw();
  for (auto q : g.targets) {
    if (q >= state.num_qubits()) throw std::invalid_argument("gate target out of range");
  }
  for (auto q : g.controls) {
    if (q >= state.num_qubits()) throw std::invalid_argument("gate control out of range");
  }
  switch (g.kind) {
    case GateKind::X:
      detail::apply_x(a, g.targets[0], workers);
      break;
    case GateKind::H:
      detail::apply_h(a, g.targets[0], workers);
      break;
    case GateKind::Phase:
    case GateKind::CPhase:
    case GateKind::CCPhase: {
      std::uint64_t mask = detail::bits_to_mask(g.targets) | detail::bits_to_mask(g.controls);
      detail::apply_phase_mask(a, mask, g.angle->radians(), workers);
      break;
    }
    case GateKind::Cnot:
    case GateKind::Toffoli:
      detail::apply_controlled_x(a, detail::bits_to_mask(g.controls), g.targets[0], workers);
      break;
    case GateKind::Swap:
    case GateKind::CSwap:
      detail::apply_swap(a, g.targets[0], g.targets[1], detail::bits_to_mask(g.controls),
                         workers);
      break;
    case GateKind::Measure: {
      if (rng == nullptr) throw std::invalid_argument("Measure requires a random source");
      if (*g.clbit >= clbits.size()) throw std::invalid_argument("Measure clbit out of range");
      clbits[*g.clbit] = static_cast<std::uint8_t>(measure_qubit(state, g.targets[0], *rng, workers));
      break;
    }
    case GateKind::ClassicalX:
      if (*g.condition >= clbits.size()) throw std::invalid_argument("condition bit out of range");
      if (clbits[*g.condition]) detail::apply_x(a, g.targets[0], workers);
      break;
    case GateKind::ClassicalPhase:
      if (*g.condition >= clbits.size()) throw std::invalid_argument("condition bit out of range");
      if (clbits[*g.condition]) {
        detail::apply_phase_mask(a, detail::bits_to_mask(g.targets), g.angle->radians(), workers);
      }
      break;
  }
}

struct RunResult {
  QuantumState final_state;
  std::vector<std::uint8_t> clbits;
  std::uint64_t rng_draws = 0;
};

inline RunResult run_circuit(const Circuit& circuit, QuantumState initial, CountingRng& rng,
                             int workers = 1) {
  if (initial.num_qubits() != circuit.num_qubits) {
    throw std::invalid_argument("initial state width does not match circuit");
  }
  const std::uint64_t draws_before = rng.draws();
  std::vector<std::uint8_t> clbits(circuit.num_clbits, 0);
  for (const Gate& g : circuit.gates) {
    apply_gate(initial, g, clbits, &rng, workers);
  }
  return RunResult{std::move(initial), std::move(clbits), rng.draws() - draws_before};
}

/// Applies a unitary circuit to raw amplitudes (linear, no rng, no clbits).
inline void apply_circuit_linear(const Circuit& circuit, std::vector<std::complex<double>>& amps,
                                 int workers = 1) {
  if (!circuit.is_unitary()) {
    throw std::invalid_argument("apply_circuit_linear requires a unitary circuit");
  }
  QuantumState s = QuantumState::from_amplitudes(std::move(amps));
  if (s.num_qubits() != circuit.num_qubits) {
    throw std::invalid_argument("amplitude vector width does not match circuit");
  }
  std::vector<std::uint8_t> no_clbits;
  for (const Gate& g : circuit.gates) {
    apply_gate(s, g, no_clbits, nullptr, workers);
  }
  amps = std::move(s.raw());
}

/// Column-major dense complex matrix of dimension 2^m.
struct ComplexMatrix {
  std::uint64_t dim = 0;
  std::vector<std::complex<double>> data;  // data[col * dim + row]

  std::complex<double>& at(std::uint64_t row, std::uint64_t col) { return data[col * dim + row]; }
  const std::complex<double>& at(std::uint64_t row, std::uint64_t col) const {
    return data[col * dim + row];
  }
};

/*! \brief Brute-force unitary of a circuit: column k is the run on basis k.

  Capped at 12 qubits. Column norms and a few random probe vectors check
  unitarity to 1e-8; this is the oracle used by the block property tests.
*/
inline ComplexMatrix circuit_unitary(const Circuit& circuit, int workers = 1) {
  if (circuit.num_qubits > 12) {
    throw std::invalid_argument("circuit_unitary is capped at 12 qubits");
  }
  if (!circuit.is_unitary()) {
    throw std::invalid_argument("circuit_unitary requires a unitary circuit");
  }
  const std::uint64_t dim = std::uint64_t{1} << circuit.num_qubits;
  ComplexMatrix u;
  u.dim = dim;
  u.data.resize(dim * dim);
  std::vector<std::complex<double>> column(dim);
  for (std::uint64_t k = 0; k < dim; ++k) {
    std::fill(column.begin(), column.end(), std::complex<double>(0.0, 0.0));
    column[k] = 1.0;
    apply_circuit_linear(circuit, column, workers);
    double norm = 0.0;
    for (std::uint64_t r = 0; r < dim; ++r) {
      u.at(r, k) = column[r];
      norm += std::norm(column[r]);
    }
    if (std::abs(norm - 1.0) > 1e-8) {
      throw std::runtime_error("unitarity violated: column norm drifted past 1e-8");
    }
  }
  // Probe U^dagger U v = v on a few seeded random vectors.
  CountingRng probe_rng(0xD1CEu);
  std::vector<std::complex<double>> v(dim), uv(dim), uduv(dim);
  for (int probe = 0; probe < 3; ++probe) {
    double norm = 0.0;
    for (auto& x : v) {
      x = {probe_rng.uniform() - 0.5, probe_rng.uniform() - 0.5};
      norm += std::norm(x);
    }
    norm = std::sqrt(norm);
    for (auto& x : v) x /= norm;
    for (std::uint64_t r = 0; r < dim; ++r) {
      std::complex<double> sum = 0.0;
      for (std::uint64_t k = 0; k < dim; ++k) sum += u.at(r, k) * v[k];
      uv[r] = sum;
    }
    for (std::uint64_t k = 0; k < dim; ++k) {
      std::complex<double> sum = 0.0;
      for (std::uint64_t r = 0; r < dim; ++r) sum += std::conj(u.at(r, k)) * uv[r];
      uduv[k] = sum;
    }
    for (std::uint64_t k = 0; k < dim; ++k) {
      if (std::abs(uduv[k] - v[k]) > 1e-8) {
        throw std::runtime_error("unitarity violated: U^dagger U probe exceeded 1e-8");
      }
    }
  }
  return u;
}

/// |<a|b>|^2 for equal-width states.
inline double fidelity(std::span<const std::complex<double>> a,
                       std::span<const std::complex<double>> b) {
  if (a.size() != b.size()) throw std::invalid_argument("fidelity: width mismatch");
  std::complex<double> overlap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) overlap += std::conj(a[i]) * b[i];
  return std::norm(overlap);
}

/// Debug dump: one "index,real,imag" row per basis amplitude.
inline void dump_state_csv(const QuantumState& state, std::ostream& out) {
  out << "index,real,imag\n";
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    out << i << ',' << amps[i].real() << ',' << amps[i].imag() << '\n';
  }
}

}  // namespace qshor
