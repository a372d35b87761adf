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
  \file resources.hpp
  \brief Exact resource accounting for the order-finding construction: qubit
         counts, per-kind gate totals, greedy depth, and scaling fits.

  For n <= 12 the full circuit is constructed symbolically and counted
  exactly; gate counts do not depend on the concrete N or base (every block
  emits a fixed gate pattern for given n and kmax), so a representative
  modulus 2^n - 1 with base 2 stands in. Beyond n = 12 gate counts come from
  the closed-form accounting below (identical arithmetic, validated against
  construction) and depth from a power-law fit — flagged as extrapolated.
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
#include "qshor/orderfind.hpp"

namespace qshor {

struct ResourcePrediction {
  std::uint64_t qubits = 0;   // 2n+3, exact by construction
  std::uint64_t gates = 0;    // closed-form total
  std::uint64_t depth = 0;    // power-law fit over constructed anchors
};

struct ResourceReport {
  std::uint32_t n = 0;
  std::uint32_t kmax = 0;
  std::uint64_t qubits = 0;
  GateCounts counts;
  std::uint64_t gates_total = 0;
  std::uint64_t depth = 0;
  bool extrapolated = false;
  ResourcePrediction predicted;
};

namespace detail {

/// CPhase count of build_qft(m, kmax).
inline std::uint64_t qft_cphase_count(std::uint64_t m, std::uint64_t kmax) {
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t k_hi = std::min(i + 1, kmax);
    total += k_hi >= 2 ? k_hi - 1 : 0;
  }
  return total;
}

/// Per-kind totals of the full order-finding circuit, by pure arithmetic.
inline GateCounts closed_form_counts(std::uint64_t n, std::uint64_t kmax) {
  const std::uint64_t m = n + 1;
  const std::uint64_t q = qft_cphase_count(m, std::min(kmax, m));
  GateCounts counts;
  counts[GateKind::CCPhase] = 12 * m * n * n;
  counts[GateKind::Phase] = 4 * m * n * n;
  counts[GateKind::CPhase] = 4 * n * n * (m + 4 * q) + 8 * n * q;
  counts[GateKind::H] = 16 * m * n * n + 8 * m * n + 4 * n;
  counts[GateKind::X] = 8 * n * n + 1;
  counts[GateKind::Cnot] = 12 * n * n;
  counts[GateKind::Toffoli] = 2 * n * n;
  counts[GateKind::Measure] = 2 * n;
  counts[GateKind::ClassicalX] = 2 * n;
  counts[GateKind::ClassicalPhase] = n * (2 * n - 1);
  return counts;
}

struct PowerFit {
  double exponent = 0.0;
  double log_offset = 0.0;
  double max_abs_residual = 0.0;
};

/// Least squares of log(value) against log(n).
inline PowerFit fit_power_law(std::span<const double> ns, std::span<const double> values) {
  if (ns.size() != values.size() || ns.size() < 2) {
    throw std::invalid_argument("power-law fit needs at least two points");
  }
  const auto count = static_cast<double>(ns.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double x = std::log(ns[i]);
    const double y = std::log(values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  PowerFit fit;
  fit.exponent = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  fit.log_offset = (sy - fit.exponent * sx) / count;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double predicted = fit.log_offset + fit.exponent * std::log(ns[i]);
    fit.max_abs_residual =
        std::max(fit.max_abs_residual, std::abs(std::log(values[i]) - predicted));
  }
  return fit;
}

inline Circuit representative_order_circuit(std::uint32_t n, std::uint32_t kmax) {
  const std::uint64_t modulus = (std::uint64_t{1} << n) - 1;  // odd, n bits
  return build_order_finding_circuit(modulus, 2, kmax);
}

}  // namespace detail

inline constexpr std::uint32_t kMaxConstructedN = 12;

inline ResourceReport estimate(std::uint32_t n, std::optional<std::uint32_t> kmax_opt = {}) {
  if (n < 2) throw std::invalid_argument("resource estimate requires n >= 2");
  const std::uint32_t kmax = kmax_opt ? *kmax_opt : default_kmax(n);
  if (kmax < 1 || kmax > n + 1) {
    throw std::invalid_argument("kmax must lie in [1, n+1]");
  }
  ResourceReport report;
  report.n = n;
  report.kmax = kmax;
  report.qubits = 2 * static_cast<std::uint64_t>(n) + 3;
  report.predicted.qubits = report.qubits;
  report.predicted.gates = detail::closed_form_counts(n, kmax).total();

  // Depth prediction: power law fitted on constructed anchors.
  const std::vector<std::uint32_t> anchors = {8, 10, 12};
  std::vector<double> anchor_n, anchor_depth;
  for (std::uint32_t an : anchors) {
    const std::uint32_t k = std::min(kmax, an + 1);
    anchor_n.push_back(an);
    anchor_depth.push_back(
        static_cast<double>(circuit_depth(detail::representative_order_circuit(an, k))));
  }
  const auto depth_fit = detail::fit_power_law(anchor_n, anchor_depth);
  report.predicted.depth = static_cast<std::uint64_t>(
      std::llround(std::exp(depth_fit.log_offset + depth_fit.exponent * std::log(n))));

  if (n <= kMaxConstructedN) {
    const Circuit c = detail::representative_order_circuit(n, kmax);
    if (c.num_qubits != report.qubits) {
      throw std::runtime_error("constructed qubit count deviates from 2n+3");
    }
    report.counts = count_gates(c);
    report.gates_total = report.counts.total();
    report.depth = circuit_depth(c);
    report.extrapolated = false;
  } else {
    report.counts = detail::closed_form_counts(n, kmax);
    report.gates_total = report.counts.total();
    report.depth = report.predicted.depth;
    report.extrapolated = true;
  }
  return report;
}

struct ScalingPoint {
  std::uint32_t n = 0;
  std::uint32_t kmax = 0;
  std::uint64_t gates_total = 0;
  std::uint64_t depth = 0;
  std::uint64_t phi_add_depth = 0;  // singly controlled constant adder
};

struct ScalingReport {
  std::vector<ScalingPoint> points;
  double gate_exponent = 0.0;
  double depth_exponent = 0.0;
  double phi_add_depth_exponent = 0.0;
  double gate_residual = 0.0;
  double depth_residual = 0.0;
};

/// kmax = ceil(lg n)+2, the logarithmic-truncation rule used for the fits.
inline std::uint32_t log_kmax_rule(std::uint32_t n) {
  std::uint32_t k = 0;
  while ((std::uint32_t{1} << k) < n) ++k;
  return std::min(k + 2, n + 1);
}

/// Log-log fits of gate count and greedy depth against n under the given
/// kmax rule. The singly controlled adder depth fit checks the linear-depth
/// behavior a control qubit forces on the rotation chain.
inline ScalingReport scaling_report(std::span<const std::uint32_t> n_values,
                                    std::uint32_t (*kmax_rule)(std::uint32_t) = log_kmax_rule) {
  if (n_values.size() < 3) {
    throw std::invalid_argument("scaling report needs at least three n values");
  }
  ScalingReport report;
  std::vector<double> ns, gates, depths, adder_depths;
  for (std::uint32_t n : n_values) {
    if (n > kMaxConstructedN) {
      throw std::invalid_argument("scaling report constructs circuits; n is capped at " +
                                  std::to_string(kMaxConstructedN));
    }
    ScalingPoint p;
    p.n = n;
    p.kmax = kmax_rule(n);
    const Circuit c = detail::representative_order_circuit(n, p.kmax);
    p.gates_total = count_gates(c).total();
    p.depth = circuit_depth(c);
    p.phi_add_depth = circuit_depth(build_phi_add_const(n + 1, 3, 1));
    report.points.push_back(p);
    ns.push_back(n);
    gates.push_back(static_cast<double>(p.gates_total));
    depths.push_back(static_cast<double>(p.depth));
    adder_depths.push_back(static_cast<double>(p.phi_add_depth));
  }
  const auto gate_fit = detail::fit_power_law(ns, gates);
  const auto depth_fit = detail::fit_power_law(ns, depths);
  const auto adder_fit = detail::fit_power_law(ns, adder_depths);
  report.gate_exponent = gate_fit.exponent;
  report.depth_exponent = depth_fit.exponent;
  report.phi_add_depth_exponent = adder_fit.exponent;
  report.gate_residual = gate_fit.max_abs_residual;
  report.depth_residual = depth_fit.max_abs_residual;
  return report;
}

inline nlohmann::json resource_report_to_json(const ResourceReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["kmax"] = r.kmax;
  j["qubits"] = r.qubits;
  j["gate_counts"] = r.counts.named();
  j["gates_total"] = r.gates_total;
  j["depth"] = r.depth;
  j["extrapolated"] = r.extrapolated;
  j["predicted"] = {{"qubits", r.predicted.qubits},
                    {"gates", r.predicted.gates},
                    {"depth", r.predicted.depth}};
  return j;
}

inline std::string resource_csv_header() { return "n,kmax,qubits,gates_total,depth"; }

inline std::string resource_csv_row(const ResourceReport& r) {
  return std::to_string(r.n) + "," + std::to_string(r.kmax) + "," + std::to_string(r.qubits) +
         "," + std::to_string(r.gates_total) + "," + std::to_string(r.depth);
}

}  // namespace qshor
