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

// Acceptance suite: one test per release criterion, each printing a
// [PASS]/[FAIL] summary line. Tolerances are pinned here and in the
// underlying suites; nothing is calibrated at run time.

#include <gtest/gtest.h>

#include <cstdio>
#include <string>

#include "qshor/selftest.hpp"

using namespace qshor;

namespace {

void report(const std::string& criterion, bool ok, const std::string& detail = "") {
  std::printf("%s criterion %s%s%s\n", ok ? "[PASS]" : "[FAIL]", criterion.c_str(),
              detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
}

std::string first_message(const SuiteResult& suite) {
  return suite.messages.empty() ? std::string() : suite.messages.front();
}

}  // namespace

TEST(acceptance, c1_qubit_count_exactness) {
  // 2n+3 qubits for n = 2..12, eleven qubits at n = 4; zero tolerance
  const SuiteResult suite = run_qubit_count_suite();
  report("1 (qubit count 2n+3, n=2..12)", suite.passed(), first_message(suite));
  EXPECT_EQ(suite.failures, 0u);
  EXPECT_EQ(suite.cases, 12u);
}

TEST(acceptance, c2_adder_oracle_exhaustive) {
  // all m in {2..5}, all (a,b): Fourier adder equals (a+b) mod 2^m; inverse
  // adder wraps with the top qubit flagging b < a; fidelity >= 1-1e-9
  const SuiteResult suite = run_adder_suite();
  report("2 (adder oracle, exhaustive m=2..5)", suite.passed(), first_message(suite));
  EXPECT_EQ(suite.failures, 0u);
  EXPECT_GE(suite.cases, 2 * (16 + 64 + 256 + 1024));
}

TEST(acceptance, c3_modular_adder_oracle_exhaustive) {
  // all odd N <= 15, all a,b < N, all four control settings; ancilla clean
  const SuiteResult suite = run_mod_adder_suite();
  report("3 (modular adder oracle, odd N<=15)", suite.passed(), first_message(suite));
  EXPECT_EQ(suite.failures, 0u);
  EXPECT_EQ(suite.cases, 4u * (9 + 25 + 49 + 81 + 121 + 169 + 225));
}

TEST(acceptance, c4_controlled_ua_permutation_and_composition) {
  // N in {7,9,11,13,15}, all coprime a, all x < N, plus the full ordered
  // composition table; fidelity >= 1-1e-9
  const SuiteResult suite = run_cua_suite();
  report("4 (C-U_a permutation + composition)", suite.passed(), first_message(suite));
  EXPECT_EQ(suite.failures, 0u);
}

TEST(acceptance, c5_order_finding_statistics) {
  // N=15, a=7, seeds 0..99: phase readings on {0,64,128,192} with frequency
  // >= 0.9 and r=4 recovered in >= 50% of the runs
  const SuiteResult suite = run_orderfind_suite(100);
  const double mass = suite.metrics.at("mass_on_ideal");
  const double recovered = suite.metrics.at("recovered_r4");
  report("5 (order-finding statistics, N=15 a=7)", suite.passed(),
         "mass=" + std::to_string(mass) + ", r4 recovery=" + std::to_string(recovered));
  EXPECT_GE(mass, 0.9);
  EXPECT_GE(recovered, 0.5);
  EXPECT_EQ(suite.failures, 0u);
}

TEST(acceptance, c6_end_to_end_factoring) {
  // factor 15 and factor 21 over seeds 0..99, <= 10 attempts each: at least
  // 95 of 100 seeds produce a nontrivial factor
  const SuiteResult f15 = run_factor_suite(15, 100);
  const SuiteResult f21 = run_factor_suite(21, 100);
  const double rate15 = f15.metrics.at("success_rate");
  const double rate21 = f21.metrics.at("success_rate");
  report("6 (end-to-end factor 15 and 21)", rate15 >= 0.95 && rate21 >= 0.95 &&
                                                f15.passed() && f21.passed(),
         "success15=" + std::to_string(rate15) + ", success21=" + std::to_string(rate21));
  EXPECT_EQ(f15.failures, 0u);
  EXPECT_EQ(f21.failures, 0u);
  EXPECT_GE(rate15, 0.95);
  EXPECT_GE(rate21, 0.95);
}

TEST(acceptance, c7_aqft_error_law) {
  // for each n in {4..10}: fitted decay factor of the operator distance per
  // unit kmax lies in 2.0 +- 0.3, and every point obeys d <= 2.6 * n * 2^-kmax
  const SuiteResult suite = run_aqft_suite();
  std::string rates;
  for (const auto& [key, value] : suite.metrics) {
    rates += key.substr(key.find('n')) + "=" + std::to_string(value).substr(0, 4) + " ";
  }
  report("7 (AQFT error law, n=4..10)", suite.passed(), rates);
  EXPECT_EQ(suite.failures, 0u);
}

TEST(acceptance, c8_scaling_exponents) {
  // kmax = ceil(lg n)+2 over n in {4,6,8,10}: gate and depth exponents in
  // [2.6, 3.4]; singly controlled adder depth exponent in [0.8, 1.2]
  const SuiteResult suite = run_scaling_suite();
  report("8 (scaling exponents)", suite.passed(),
         "gates=" + std::to_string(suite.metrics.at("gate_exponent")) +
             ", depth=" + std::to_string(suite.metrics.at("depth_exponent")) +
             ", c-adder depth=" + std::to_string(suite.metrics.at("phi_add_depth_exponent")));
  EXPECT_EQ(suite.failures, 0u);
}

TEST(acceptance, c9_inversion_and_determinism) {
  // 1000 random apply-then-invert round trips across all blocks, and
  // bit-identical runs across worker counts under one seed
  const SuiteResult inversion = run_inversion_suite(1000);
  const SuiteResult determinism = run_determinism_suite();
  report("9 (inversion round trips + seeded determinism)",
         inversion.passed() && determinism.passed(),
         first_message(inversion) + first_message(determinism));
  EXPECT_EQ(inversion.failures, 0u);
  EXPECT_EQ(inversion.cases, 1000u);
  EXPECT_EQ(determinism.failures, 0u);
}
