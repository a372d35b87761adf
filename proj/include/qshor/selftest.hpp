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
  \file selftest.hpp
  \brief Exhaustive small-instance verification suites driven by classical
         oracles: plain integer arithmetic computes every expected outcome,
         and the statevector simulation of the constructed circuits must
         match it. Run by `qshor verify` and by the acceptance tests.
*/

#pragma once

#include <cstdint>
#include <cstring>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "qshor/blocks.hpp"
#include "qshor/circuit.hpp"
#include "qshor/factor.hpp"
#include "qshor/orderfind.hpp"
#include "qshor/resources.hpp"
#include "qshor/simulator.hpp"

namespace qshor {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> messages;
  std::map<std::string, double> metrics;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      ++failures;
      if (messages.size() < 16) messages.push_back(what);
    }
  }

  bool passed() const { return failures == 0; }
};

inline constexpr double kFidelityFloor = 1.0 - 1e-9;

namespace selftest_detail {

inline double basis_fidelity(const QuantumState& state, std::uint64_t basis) {
  return std::norm(state.amplitude(basis));
}

inline QuantumState run_unitary(const Circuit& c, std::uint64_t basis) {
  QuantumState s = init_basis_state(c.num_qubits, basis);
  std::vector<std::complex<double>> amps(s.amplitudes().begin(), s.amplitudes().end());
  apply_circuit_linear(c, amps);
  return QuantumState::from_amplitudes(std::move(amps));
}

}  // namespace selftest_detail

/// phi-adder against plain integer addition, exhaustive over m in [2,5]:
/// forward (a+b) mod 2^m, inverse (b-a) mod 2^m, and the top-qubit comparison
/// readout on the subdomain of m-1-bit operands.
inline SuiteResult run_adder_suite() {
  SuiteResult suite;
  suite.name = "adder";
  for (std::uint32_t m = 1; m <= 5; ++m) {
    const std::uint64_t size = std::uint64_t{1} << m;
    const Circuit qft = build_qft(m, m);
    const Circuit iqft = invert_circuit(qft);
    for (std::uint64_t a = 0; a < size; ++a) {
      Circuit forward(m);
      forward.append(qft);
      forward.append(build_phi_add_const(m, a));
      forward.append(iqft);
      Circuit backward(m);
      backward.append(qft);
      backward.append(invert_circuit(build_phi_add_const(m, a)));
      backward.append(iqft);
      for (std::uint64_t b = 0; b < size; ++b) {
        const auto sum_state = selftest_detail::run_unitary(forward, b);
        const std::uint64_t want_sum = (a + b) % size;
        suite.check(selftest_detail::basis_fidelity(sum_state, want_sum) >= kFidelityFloor,
                    "adder m=" + std::to_string(m) + " a=" + std::to_string(a) +
                        " b=" + std::to_string(b));
        const auto diff_state = selftest_detail::run_unitary(backward, b);
        const std::uint64_t want_diff = (b + size - a) % size;
        suite.check(selftest_detail::basis_fidelity(diff_state, want_diff) >= kFidelityFloor,
                    "inverse adder m=" + std::to_string(m) + " a=" + std::to_string(a) +
                        " b=" + std::to_string(b));
        if (a < size / 2 && b < size / 2 && b < a) {
          // borrow flag: underflow leaves the top qubit set
          suite.check((want_diff >> (m - 1)) & 1,
                      "underflow top qubit m=" + std::to_string(m) + " a=" + std::to_string(a) +
                          " b=" + std::to_string(b));
        }
      }
    }
  }
  return suite;
}

/// Doubly controlled modular adder against (a+b) mod N, exhaustive over all
/// odd N <= 15, all a,b < N and all four control settings; the ancilla must
/// come back clean.
inline SuiteResult run_mod_adder_suite() {
  SuiteResult suite;
  suite.name = "modadder";
  for (std::uint64_t modulus : {3, 5, 7, 9, 11, 13, 15}) {
    const auto n = static_cast<std::uint32_t>(bit_length(modulus));
    const std::uint32_t m = n + 1;
    const std::uint32_t ancilla = m;
    const std::uint32_t c1 = m + 1;
    const std::uint32_t c2 = m + 2;
    std::vector<std::uint32_t> b_map(m);
    for (std::uint32_t j = 0; j < m; ++j) b_map[j] = j;
    const Circuit qft = build_qft(m, m);
    for (std::uint64_t a = 0; a < modulus; ++a) {
      Circuit c(n + 4);
      c.append(qft, b_map);
      c.append(build_cc_phi_add_mod(n, a, modulus, m));
      c.append(invert_circuit(qft), b_map);
      for (std::uint64_t b = 0; b < modulus; ++b) {
        for (int controls = 0; controls < 4; ++controls) {
          const std::uint64_t control_bits =
              (static_cast<std::uint64_t>(controls & 1) << c1) |
              (static_cast<std::uint64_t>((controls >> 1) & 1) << c2);
          const auto out = selftest_detail::run_unitary(c, b | control_bits);
          const std::uint64_t want_b = controls == 3 ? (a + b) % modulus : b;
          const bool value_ok =
              selftest_detail::basis_fidelity(out, want_b | control_bits) >= kFidelityFloor;
          const bool ancilla_ok = out.probability_one(ancilla) <= 1e-9;
          suite.check(value_ok && ancilla_ok,
                      "modadder N=" + std::to_string(modulus) + " a=" + std::to_string(a) +
                          " b=" + std::to_string(b) + " ctl=" + std::to_string(controls));
        }
      }
    }
  }
  return suite;
}

/// C-U_a as a permutation on {|x> : x < N} with clean work registers, plus
/// the composition C-U_a then C-U_a' = C-U_(aa' mod N) over all ordered
/// coprime pairs (checked state-for-state through cached outputs).
inline SuiteResult run_cua_suite(std::span<const std::uint64_t> moduli) {
  SuiteResult suite;
  suite.name = "cua";
  for (std::uint64_t modulus : moduli) {
    const auto n = static_cast<std::uint32_t>(bit_length(modulus));
    const std::uint64_t control_bit = std::uint64_t{1} << (2 * n + 2);
    std::vector<std::uint64_t> coprime;
    for (std::uint64_t a = 1; a < modulus; ++a) {
      if (gcd_u64(a, modulus) == 1) coprime.push_back(a);
    }
    std::map<std::uint64_t, Circuit> blocks;
    for (std::uint64_t a : coprime) blocks.emplace(a, build_controlled_ua(n, a, modulus, n + 1));

    // outputs[a][x]: final state of C-U_a on |c=1>|x>|0>
    std::map<std::uint64_t, std::vector<std::vector<std::complex<double>>>> outputs;
    for (std::uint64_t a : coprime) {
      auto& per_x = outputs[a];
      per_x.resize(modulus);
      for (std::uint64_t x = 0; x < modulus; ++x) {
        const auto out = selftest_detail::run_unitary(blocks.at(a), x | control_bit);
        const std::uint64_t want = ((a * x) % modulus) | control_bit;
        suite.check(selftest_detail::basis_fidelity(out, want) >= kFidelityFloor,
                    "cua N=" + std::to_string(modulus) + " a=" + std::to_string(a) +
                        " x=" + std::to_string(x));
        per_x[x].assign(out.amplitudes().begin(), out.amplitudes().end());
      }
    }
    for (std::uint64_t a1 : coprime) {
      for (std::uint64_t a2 : coprime) {
        const std::uint64_t product = a1 * a2 % modulus;
        for (std::uint64_t x = 0; x < modulus; ++x) {
          std::vector<std::complex<double>> chained = outputs.at(a2)[x];
          apply_circuit_linear(blocks.at(a1), chained);
          suite.check(fidelity(outputs.at(product)[x], chained) >= kFidelityFloor,
                      "composition N=" + std::to_string(modulus) + " a1=" + std::to_string(a1) +
                          " a2=" + std::to_string(a2) + " x=" + std::to_string(x));
        }
      }
    }
  }
  return suite;
}

inline SuiteResult run_cua_suite() {
  const std::uint64_t moduli[] = {7, 9, 11, 13, 15};
  return run_cua_suite(moduli);
}

/// Semiclassical order finding for N=15: with base 7 the phase readings must
/// concentrate on {0, 64, 128, 192} and continued fractions recover r=4; with
/// base 4 (order two) readings stay in {0, 128}.
inline SuiteResult run_orderfind_suite(int runs = 100) {
  SuiteResult suite;
  suite.name = "orderfind";
  const std::set<std::uint64_t> ideal = {0, 64, 128, 192};
  int mass_hits = 0;
  int recovered = 0;
  for (int seed = 0; seed < runs; ++seed) {
    CountingRng rng(static_cast<std::uint64_t>(seed));
    const MeasurementRecord record = run_semiclassical_order_finding(15, 7, 5, rng);
    suite.check(record.bits.size() == 8, "record length seed=" + std::to_string(seed));
    if (ideal.count(record.m)) ++mass_hits;
    const OrderResult order = phase_to_order(record, 15, 7);
    if (order.order && *order.order == 4) ++recovered;
    if (order.validated) {
      suite.check(mod_exp(7, *order.order, 15) == 1,
                  "validation seed=" + std::to_string(seed));
    }
  }
  suite.metrics["mass_on_ideal"] = static_cast<double>(mass_hits) / runs;
  suite.metrics["recovered_r4"] = static_cast<double>(recovered) / runs;
  suite.check(suite.metrics["mass_on_ideal"] >= 0.9, "phase mass below 0.9");
  suite.check(suite.metrics["recovered_r4"] >= 0.5, "r=4 recovery rate below 0.5");

  int order_two_hits = 0;
  const int order_two_runs = 40;
  for (int seed = 0; seed < order_two_runs; ++seed) {
    CountingRng rng(static_cast<std::uint64_t>(seed));
    const MeasurementRecord record = run_semiclassical_order_finding(15, 4, 5, rng);
    if (record.m == 0 || record.m == 128) ++order_two_hits;
  }
  suite.metrics["order_two_mass"] = static_cast<double>(order_two_hits) / order_two_runs;
  suite.check(order_two_hits == order_two_runs, "base-4 readings escaped {0, 128}");
  return suite;
}

/// Apply-then-invert round trips on random blocks and random basis states.
inline SuiteResult run_inversion_suite(int trials = 1000, std::uint64_t seed = 7) {
  SuiteResult suite;
  suite.name = "inversion";
  CountingRng rng(seed);
  const std::uint64_t moduli[] = {5, 7, 9, 11, 13, 15};
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t modulus = moduli[rng.uniform_int(0, 5)];
    const auto n = static_cast<std::uint32_t>(bit_length(modulus));
    const std::uint32_t kmax = static_cast<std::uint32_t>(rng.uniform_int(1, n + 1));
    Circuit block;
    switch (rng.uniform_int(0, 5)) {
      case 0:
        block = build_qft(static_cast<std::uint32_t>(rng.uniform_int(1, 6)), kmax);
        break;
      case 1: {
        const auto width = static_cast<std::uint32_t>(rng.uniform_int(2, 6));
        block = build_phi_add_const(width, rng.uniform_int(0, (1u << width) - 1),
                                    static_cast<int>(rng.uniform_int(0, 2)));
        break;
      }
      case 2:
        block = build_cc_phi_add_mod(n, rng.uniform_int(0, modulus - 1), modulus, kmax);
        break;
      case 3:
        block = build_cmult_mod(n, rng.uniform_int(0, modulus - 1), modulus, kmax);
        break;
      case 4:
        block = build_controlled_swap_register(static_cast<std::uint32_t>(rng.uniform_int(1, 5)));
        break;
      default: {
        std::uint64_t a = rng.uniform_int(1, modulus - 1);
        while (gcd_u64(a, modulus) != 1) a = rng.uniform_int(1, modulus - 1);
        block = build_controlled_ua(n, a, modulus, kmax);
        break;
      }
    }
    Circuit round_trip(block.num_qubits);
    round_trip.append(block);
    round_trip.append(invert_circuit(block));
    const std::uint64_t basis = rng.uniform_int(0, (std::uint64_t{1} << block.num_qubits) - 1);
    const auto out = selftest_detail::run_unitary(round_trip, basis);
    suite.check(selftest_detail::basis_fidelity(out, basis) >= kFidelityFloor,
                "round trip trial=" + std::to_string(trial));
  }
  return suite;
}

/// Equal seeds must replay bit-for-bit, whatever the worker count.
inline SuiteResult run_determinism_suite() {
  SuiteResult suite;
  suite.name = "determinism";
  const Circuit c = build_order_finding_circuit(15, 7, 5);
  auto run_with = [&](int workers) {
    CountingRng rng(42);
    return run_circuit(c, init_basis_state(c.num_qubits, 0), rng, workers);
  };
  const RunResult base = run_with(1);
  for (int workers : {1, 2, 4}) {
    const RunResult other = run_with(workers);
    suite.check(other.clbits == base.clbits,
                "clbits diverged at workers=" + std::to_string(workers));
    suite.check(other.rng_draws == base.rng_draws,
                "draw count diverged at workers=" + std::to_string(workers));
    const auto a = base.final_state.amplitudes();
    const auto b = other.final_state.amplitudes();
    suite.check(a.size() == b.size() &&
                    std::memcmp(a.data(), b.data(), a.size() * sizeof(a[0])) == 0,
                "amplitudes diverged at workers=" + std::to_string(workers));
  }
  return suite;
}

/// The constructed order-finding circuit uses exactly 2n+3 qubits.
inline SuiteResult run_qubit_count_suite() {
  SuiteResult suite;
  suite.name = "qubitcount";
  for (std::uint32_t n = 2; n <= 12; ++n) {
    const ResourceReport report = estimate(n);
    suite.check(report.qubits == 2 * n + 3,
                "qubits(n=" + std::to_string(n) + ") = " + std::to_string(report.qubits));
  }
  suite.check(estimate(4).qubits == 11, "n=4 must use eleven qubits");
  return suite;
}

/*! \brief Largest singular value of (A - B) by power iteration on the
  normal operator, with circuits applied directly to probe vectors.
*/
inline double operator_distance(const Circuit& a, const Circuit& b, int iterations = 200,
                                std::uint64_t seed = 0x5EEDu) {
  if (a.num_qubits != b.num_qubits) {
    throw std::invalid_argument("operator_distance: width mismatch");
  }
  const std::uint64_t dim = std::uint64_t{1} << a.num_qubits;
  const Circuit a_inv = invert_circuit(a);
  const Circuit b_inv = invert_circuit(b);
  CountingRng rng(seed);
  std::vector<std::complex<double>> x(dim);
  double norm = 0.0;
  for (auto& v : x) {
    v = {rng.uniform() - 0.5, rng.uniform() - 0.5};
    norm += std::norm(v);
  }
  norm = std::sqrt(norm);
  for (auto& v : x) v /= norm;

  double sigma_squared = 0.0;
  std::vector<std::complex<double>> ya(dim), yb(dim), za(dim), zb(dim);
  for (int iter = 0; iter < iterations; ++iter) {
    ya = x;
    apply_circuit_linear(a, ya);
    yb = x;
    apply_circuit_linear(b, yb);
    double y_norm2 = 0.0;
    for (std::uint64_t i = 0; i < dim; ++i) {
      ya[i] -= yb[i];
      y_norm2 += std::norm(ya[i]);
    }
    sigma_squared = y_norm2;  // Rayleigh quotient of the normal operator at unit x
    if (y_norm2 < 1e-30) return 0.0;
    za = ya;
    apply_circuit_linear(a_inv, za);
    zb = ya;
    apply_circuit_linear(b_inv, zb);
    double z_norm2 = 0.0;
    for (std::uint64_t i = 0; i < dim; ++i) {
      za[i] -= zb[i];
      z_norm2 += std::norm(za[i]);
    }
    const double z_norm = std::sqrt(z_norm2);
    for (std::uint64_t i = 0; i < dim; ++i) x[i] = za[i] / z_norm;
  }
  return std::sqrt(sigma_squared);
}

/// Truncation error law: over kmax = 1..n-1 the distance to the exact QFT
/// decays by a fitted factor of two per unit kmax and stays under the
/// c * n * 2^-kmax envelope.
inline SuiteResult run_aqft_suite() {
  SuiteResult suite;
  suite.name = "aqft";
  constexpr double kEnvelopeConstant = 2.6;
  for (std::uint32_t n = 4; n <= 10; ++n) {
    const Circuit exact = build_qft(n, n);
    std::vector<double> log2_distances;
    for (std::uint32_t kmax = 1; kmax < n; ++kmax) {
      const double d = operator_distance(exact, build_qft(n, kmax));
      suite.check(d <= kEnvelopeConstant * n * std::ldexp(1.0, -static_cast<int>(kmax)),
                  "envelope n=" + std::to_string(n) + " kmax=" + std::to_string(kmax));
      log2_distances.push_back(std::log2(d));
    }
    // least-squares slope of log2(d) against kmax
    const auto count = static_cast<double>(log2_distances.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < log2_distances.size(); ++i) {
      const double k = static_cast<double>(i + 1);
      sx += k;
      sy += log2_distances[i];
      sxx += k * k;
      sxy += k * log2_distances[i];
    }
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    const double rate = std::exp2(-slope);
    suite.metrics["decay_rate_n" + std::to_string(n)] = rate;
    suite.check(rate >= 1.7 && rate <= 2.3,
                "decay rate " + std::to_string(rate) + " at n=" + std::to_string(n));
  }
  return suite;
}

/// Fitted gate and depth exponents with kmax = ceil(lg n)+2.
inline SuiteResult run_scaling_suite() {
  SuiteResult suite;
  suite.name = "scaling";
  const std::uint32_t ns[] = {4, 6, 8, 10};
  const ScalingReport report = scaling_report(ns);
  suite.metrics["gate_exponent"] = report.gate_exponent;
  suite.metrics["depth_exponent"] = report.depth_exponent;
  suite.metrics["phi_add_depth_exponent"] = report.phi_add_depth_exponent;
  suite.check(report.gate_exponent >= 2.6 && report.gate_exponent <= 3.4,
              "gate exponent " + std::to_string(report.gate_exponent));
  suite.check(report.depth_exponent >= 2.6 && report.depth_exponent <= 3.4,
              "depth exponent " + std::to_string(report.depth_exponent));
  suite.check(report.phi_add_depth_exponent >= 0.8 && report.phi_add_depth_exponent <= 1.2,
              "adder depth exponent " + std::to_string(report.phi_add_depth_exponent));
  return suite;
}

/// End-to-end factoring success rate over seeded pipelines.
inline SuiteResult run_factor_suite(std::uint64_t N, int seeds = 100) {
  SuiteResult suite;
  suite.name = "factor" + std::to_string(N);
  int successes = 0;
  for (int seed = 0; seed < seeds; ++seed) {
    FactorConfig config;
    config.seed = static_cast<std::uint64_t>(seed);
    const FactorizationResult result = shor_factor(N, config);
    if (result.factor) {
      suite.check(*result.factor > 1 && *result.factor < N && N % *result.factor == 0,
                  "bad factor seed=" + std::to_string(seed));
      ++successes;
    }
  }
  suite.metrics["success_rate"] = static_cast<double>(successes) / seeds;
  return suite;
}

inline std::vector<SuiteResult> run_all_suites() {
  std::vector<SuiteResult> results;
  results.push_back(run_adder_suite());
  results.push_back(run_mod_adder_suite());
  results.push_back(run_cua_suite());
  results.push_back(run_qubit_count_suite());
  results.push_back(run_orderfind_suite());
  results.push_back(run_inversion_suite());
  results.push_back(run_determinism_suite());
  results.push_back(run_aqft_suite());
  results.push_back(run_scaling_suite());
  results.push_back(run_factor_suite(15));
  results.push_back(run_factor_suite(21));
  return results;
}

}  // namespace qshor
