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

// qshor command line: factor, order, resources, emit, verify.
// Exit codes: 0 success, 1 usage/validation error, 2 factoring attempts
// exhausted, 3 verification failure.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qshor/blocks.hpp"
#include "qshor/circuit_json.hpp"
#include "qshor/factor.hpp"
#include "qshor/orderfind.hpp"
#include "qshor/resources.hpp"
#include "qshor/selftest.hpp"

namespace {

std::uint64_t resolve_seed(std::optional<std::uint64_t> cli_seed) {
  if (cli_seed) return *cli_seed;
  if (const char* env = std::getenv("QSHOR_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  std::random_device entropy;
  return (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
}

std::optional<std::uint32_t> resolve_kmax(const std::string& spec, std::uint32_t n) {
  if (spec == "auto") return std::nullopt;  // policy default
  if (spec == "exact") return n + 1;
  const unsigned long v = std::stoul(spec);
  if (v < 1 || v > n + 1) {
    throw CLI::ValidationError("--kmax", "kmax must lie in [1, n+1] or be 'exact'/'auto'");
  }
  return static_cast<std::uint32_t>(v);
}

int cmd_factor(std::uint64_t N, std::optional<std::uint64_t> seed, const std::string& kmax_spec,
               int max_attempts, std::optional<std::uint64_t> base, const std::string& format,
               int workers) {
  const auto n = static_cast<std::uint32_t>(qshor::bit_length(N));
  qshor::FactorConfig config;
  config.seed = resolve_seed(seed);
  config.max_attempts = max_attempts;
  config.forced_base = base;
  config.kmax = resolve_kmax(kmax_spec, n);
  config.workers = workers;
  const qshor::FactorizationResult result = qshor::shor_factor(N, config);
  if (format == "json") {
    auto j = qshor::factorization_to_json(result);
    j["seed"] = config.seed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "N = " << N << "  (seed " << config.seed << ")\n";
    for (const auto& attempt : result.attempts) {
      std::cout << "  attempt a=" << attempt.base;
      if (attempt.order) std::cout << " r=" << *attempt.order;
      std::cout << ": " << attempt.outcome << "\n";
    }
    if (result.factor) {
      std::cout << "factor " << *result.factor << " (route "
                << qshor::factor_route_name(*result.route) << "), cofactor "
                << N / *result.factor << "\n";
    } else {
      std::cout << "no factor found in " << max_attempts << " attempts\n";
    }
  }
  return result.factor ? 0 : 2;
}

int cmd_order(std::uint64_t N, std::uint64_t a, std::optional<std::uint64_t> seed,
              const std::string& kmax_spec, const std::string& format, int workers) {
  const std::uint64_t g = qshor::gcd_u64(a, N);
  if (g != 1) {
    std::cerr << "error: gcd(" << a << ", " << N << ") = " << g
              << "; order finding needs a coprime base\n";
    return 1;
  }
  const auto n = static_cast<std::uint32_t>(qshor::bit_length(N));
  const auto kmax_opt = resolve_kmax(kmax_spec, n);
  const std::uint32_t kmax = kmax_opt ? *kmax_opt : qshor::default_kmax(n);
  const std::uint64_t used_seed = resolve_seed(seed);
  qshor::CountingRng rng(used_seed);
  const auto record = qshor::run_semiclassical_order_finding(N, a, kmax, rng, workers);
  const auto result = qshor::phase_to_order(record, N, a);
  if (format == "json") {
    auto j = qshor::order_result_to_json(result);
    j["seed"] = used_seed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "N = " << N << ", a = " << a << "  (seed " << used_seed << ", kmax " << kmax
              << ", " << 2 * record.n + 3 << " qubits)\n";
    std::cout << "bits (measurement order):";
    for (auto b : record.bits) std::cout << ' ' << int(b);
    std::cout << "\nm = " << record.m << ", phase = " << record.phase << "\n";
    if (result.order) {
      std::cout << "order r = " << *result.order << " (validated: a^r = 1 mod N)\n";
    } else {
      std::cout << "no order recovered from this run; try another seed\n";
    }
  }
  return 0;
}

int cmd_resources(std::optional<std::uint32_t> n, const std::string& kmax_spec,
                  std::vector<std::uint32_t> scan, bool fit, const std::string& format) {
  if (!n && scan.empty()) {
    std::cerr << "error: give n or --scan\n";
    return 1;
  }
  if (fit) {
    if (scan.size() < 3) {
      std::cerr << "error: --fit needs a --scan with at least three n values\n";
      return 1;
    }
    const auto report = qshor::scaling_report(scan);
    if (format == "json") {
      nlohmann::json j;
      j["gate_exponent"] = report.gate_exponent;
      j["depth_exponent"] = report.depth_exponent;
      j["phi_add_depth_exponent"] = report.phi_add_depth_exponent;
      j["gate_residual"] = report.gate_residual;
      j["depth_residual"] = report.depth_residual;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "gate exponent:           " << report.gate_exponent << "\n"
                << "depth exponent:          " << report.depth_exponent << "\n"
                << "c-phi-add depth exponent: " << report.phi_add_depth_exponent << "\n";
    }
    return 0;
  }
  std::vector<qshor::ResourceReport> reports;
  if (n) reports.push_back(qshor::estimate(*n, resolve_kmax(kmax_spec, *n)));
  for (auto sn : scan) reports.push_back(qshor::estimate(sn, resolve_kmax(kmax_spec, sn)));
  if (format == "csv") {
    std::cout << qshor::resource_csv_header() << "\n";
    for (const auto& r : reports) std::cout << qshor::resource_csv_row(r) << "\n";
  } else if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(qshor::resource_report_to_json(r));
    std::cout << (reports.size() == 1 ? j[0] : j).dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << "n = " << r.n << ", kmax = " << r.kmax << (r.extrapolated ? "  [extrapolated]" : "")
                << "\n  qubits:      " << r.qubits << "\n  gates total: " << r.gates_total
                << "\n  depth:       " << r.depth << "\n  per kind:   ";
      for (const auto& [kind, count] : r.counts.named()) {
        std::cout << ' ' << kind << '=' << count;
      }
      std::cout << "\n  predicted:   qubits=" << r.predicted.qubits
                << " gates=" << r.predicted.gates << " depth=" << r.predicted.depth << "\n";
    }
  }
  return 0;
}

int cmd_emit(std::uint64_t N, std::uint64_t a, const std::string& block,
             const std::string& kmax_spec, const std::string& out_path) {
  const auto n = static_cast<std::uint32_t>(qshor::bit_length(N));
  const auto kmax_opt = resolve_kmax(kmax_spec, n);
  const std::uint32_t kmax = kmax_opt ? *kmax_opt : qshor::default_kmax(n);
  qshor::Circuit circuit;
  if (block == "orderfinding") {
    circuit = qshor::build_order_finding_circuit(N, a, kmax);
  } else if (block == "qft") {
    circuit = qshor::build_qft(n + 1, kmax);
  } else if (block == "phiadd") {
    circuit = qshor::build_phi_add_const(n + 1, a);
  } else if (block == "ccphiaddmod") {
    circuit = qshor::build_cc_phi_add_mod(n, a, N, kmax);
  } else if (block == "cmult") {
    circuit = qshor::build_cmult_mod(n, a, N, kmax);
  } else if (block == "cswap") {
    circuit = qshor::build_controlled_swap_register(n);
  } else if (block == "cua") {
    circuit = qshor::build_controlled_ua(n, a, N, kmax);
  } else {
    std::cerr << "error: unknown block '" << block << "'\n";
    return 1;
  }
  nlohmann::json doc;
  doc["metadata"] = {{"block", block}, {"n", n}, {"a", a}, {"N", N}, {"kmax", kmax}};
  doc["circuit"] = qshor::circuit_to_json(circuit);
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 1;
  }
  out << doc.dump(2) << "\n";
  if (!out.good()) {
    std::cerr << "error: write to '" << out_path << "' failed\n";
    return 1;
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& which) {
  using Runner = qshor::SuiteResult (*)();
  const std::vector<std::pair<std::string, Runner>> registry = {
      {"adder", [] { return qshor::run_adder_suite(); }},
      {"modadder", [] { return qshor::run_mod_adder_suite(); }},
      {"cua", [] { return qshor::run_cua_suite(); }},
      {"qubitcount", [] { return qshor::run_qubit_count_suite(); }},
      {"orderfind", [] { return qshor::run_orderfind_suite(); }},
      {"inversion", [] { return qshor::run_inversion_suite(); }},
      {"determinism", [] { return qshor::run_determinism_suite(); }},
      {"aqft", [] { return qshor::run_aqft_suite(); }},
      {"scaling", [] { return qshor::run_scaling_suite(); }},
      {"factor15", [] { return qshor::run_factor_suite(15); }},
      {"factor21", [] { return qshor::run_factor_suite(21); }},
  };
  bool any_failure = false;
  bool ran_any = false;
  for (const auto& [name, runner] : registry) {
    if (!which.empty() &&
        std::find(which.begin(), which.end(), name) == which.end()) {
      continue;
    }
    ran_any = true;
    const qshor::SuiteResult result = runner();
    std::cout << (result.passed() ? "[PASS] " : "[FAIL] ") << result.name << ": "
              << result.cases << " cases, " << result.failures << " failures";
    for (const auto& [key, value] : result.metrics) {
      std::cout << ", " << key << "=" << value;
    }
    std::cout << "\n";
    for (const auto& msg : result.messages) {
      std::cout << "       " << msg << "\n";
    }
    if (!result.passed()) any_failure = true;
  }
  if (!ran_any) {
    std::cerr << "error: no suite matched; known suites: adder modadder cua qubitcount "
                 "orderfind inversion determinism aqft scaling factor15 factor21\n";
    return 1;
  }
  return any_failure ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order-finding circuits, statevector simulation and factoring"};
  app.require_subcommand(1);

  // factor
  auto* factor = app.add_subcommand("factor", "factor N with the quantum order-finding pipeline");
  std::uint64_t factor_n = 0;
  std::optional<std::uint64_t> factor_seed, factor_base;
  std::string factor_kmax = "auto", factor_format = "text";
  int factor_attempts = 10, factor_workers = 1;
  factor->add_option("N", factor_n, "integer to factor (>= 4, composite)")
      ->required()
      ->check(CLI::Range(std::uint64_t{4}, std::uint64_t{4095}));
  factor->add_option("--seed", factor_seed, "64-bit seed (default: QSHOR_SEED or entropy)");
  factor->add_option("--kmax", factor_kmax, "QFT truncation: integer, 'exact' or 'auto'");
  factor->add_option("--max-attempts", factor_attempts, "attempt budget")->check(CLI::PositiveNumber);
  factor->add_option("--base", factor_base, "force the base a instead of sampling");
  factor->add_option("--format", factor_format)->check(CLI::IsMember({"text", "json"}));
  factor->add_option("--workers", factor_workers)->check(CLI::PositiveNumber);

  // order
  auto* order = app.add_subcommand("order", "run semiclassical order finding for (N, a)");
  std::uint64_t order_n = 0, order_a = 0;
  std::optional<std::uint64_t> order_seed;
  std::string order_kmax = "auto", order_format = "text";
  int order_workers = 1;
  order->add_option("N", order_n, "odd modulus")->required();
  order->add_option("a", order_a, "base, coprime with N")->required();
  order->add_option("--seed", order_seed);
  order->add_option("--kmax", order_kmax, "QFT truncation: integer, 'exact' or 'auto'");
  order->add_option("--format", order_format)->check(CLI::IsMember({"text", "json"}));
  order->add_option("--workers", order_workers)->check(CLI::PositiveNumber);

  // resources
  auto* resources = app.add_subcommand("resources", "count qubits, gates and depth");
  std::optional<std::uint32_t> res_n;
  std::string res_kmax = "auto", res_format = "text";
  std::vector<std::uint32_t> res_scan;
  bool res_fit = false;
  resources->add_option("n", res_n, "register width in bits");
  resources->add_option("--kmax", res_kmax, "QFT truncation: integer, 'exact' or 'auto'");
  resources->add_option("--scan", res_scan, "comma-separated n values")->delimiter(',');
  resources->add_flag("--fit", res_fit, "fit scaling exponents over --scan");
  resources->add_option("--format", res_format)->check(CLI::IsMember({"text", "json", "csv"}));

  // emit
  auto* emit = app.add_subcommand("emit", "write a circuit as JSON");
  std::uint64_t emit_n = 0, emit_a = 0;
  std::string emit_block = "orderfinding", emit_kmax = "auto", emit_out;
  emit->add_option("N", emit_n, "odd modulus")->required();
  emit->add_option("a", emit_a, "base / multiplier")->required();
  emit->add_option("--block", emit_block,
                   "orderfinding|qft|phiadd|ccphiaddmod|cmult|cswap|cua");
  emit->add_option("--kmax", emit_kmax, "QFT truncation: integer, 'exact' or 'auto'");
  emit->add_option("-o,--output", emit_out, "output path (default: stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run the oracle verification suites");
  std::vector<std::string> verify_suites;
  verify->add_option("--suite", verify_suites, "run only the named suites (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (factor->parsed()) {
      return cmd_factor(factor_n, factor_seed, factor_kmax, factor_attempts, factor_base,
                        factor_format, factor_workers);
    }
    if (order->parsed()) {
      return cmd_order(order_n, order_a, order_seed, order_kmax, order_format, order_workers);
    }
    if (resources->parsed()) {
      return cmd_resources(res_n, res_kmax, res_scan, res_fit, res_format);
    }
    if (emit->parsed()) {
      return cmd_emit(emit_n, emit_a, emit_block, emit_kmax, emit_out);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_suites);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
