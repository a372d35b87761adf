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

#include "qshor/blocks.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "qshor/selftest.hpp"
#include "qshor/simulator.hpp"
#include "test_support.hpp"

using namespace qshor;

namespace {

constexpr double kPi = 3.14159265358979323846;

// (a + b) mod 2^m through the Fourier sandwich.
QuantumState add_mod_power_of_two(std::uint32_t m, std::uint64_t a, std::uint64_t b,
                                  bool inverse = false) {
  Circuit c(m);
  const Circuit qft = build_qft(m, m);
  c.append(qft);
  const Circuit adder = build_phi_add_const(m, a);
  c.append(inverse ? invert_circuit(adder) : adder);
  c.append(invert_circuit(qft));
  return testsupport::run_on_basis(c, b);
}

}  // namespace

TEST(qft, width_one_is_a_single_h) {
  const Circuit c = build_qft(1, 1);
  ASSERT_EQ(c.gates.size(), 1u);
  EXPECT_EQ(c.gates[0], Gate::h(0));
}

TEST(qft, zero_state_becomes_uniform) {
  const std::uint32_t m = 3;
  const auto out = testsupport::run_on_basis(build_qft(m, m), 0);
  const double want = std::pow(2.0, -static_cast<double>(m) / 2.0);
  for (std::uint64_t i = 0; i < out.dimension(); ++i) {
    EXPECT_NEAR(out.amplitude(i).real(), want, 1e-12);
    EXPECT_NEAR(out.amplitude(i).imag(), 0.0, 1e-12);
  }
}

TEST(qft, matches_bit_reversed_dft_matrix) {
  for (std::uint32_t m = 1; m <= 6; ++m) {
    const ComplexMatrix u = circuit_unitary(build_qft(m, m));
    const std::uint64_t dim = std::uint64_t{1} << m;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::uint64_t row = 0; row < dim; ++row) {
      std::uint64_t reversed = 0;
      for (std::uint32_t bit = 0; bit < m; ++bit) {
        if (row & (std::uint64_t{1} << bit)) reversed |= std::uint64_t{1} << (m - 1 - bit);
      }
      for (std::uint64_t col = 0; col < dim; ++col) {
        const double angle = 2.0 * kPi * static_cast<double>(reversed * col) /
                             static_cast<double>(dim);
        const std::complex<double> want = scale * std::polar(1.0, angle);
        ASSERT_NEAR(std::abs(u.at(row, col) - want), 0.0, 1e-8)
            << "m=" << m << " row=" << row << " col=" << col;
      }
    }
  }
}

TEST(qft, kmax_one_drops_all_rotations) {
  const Circuit c = build_qft(5, 1);
  EXPECT_EQ(count_gates(c)[GateKind::H], 5u);
  EXPECT_EQ(count_gates(c)[GateKind::CPhase], 0u);
}

TEST(qft, truncation_only_removes_small_rotations) {
  const GateCounts exact = count_gates(build_qft(6, 6));
  const GateCounts truncated = count_gates(build_qft(6, 3));
  EXPECT_EQ(exact[GateKind::H], truncated[GateKind::H]);
  EXPECT_GT(exact[GateKind::CPhase], truncated[GateKind::CPhase]);
}

TEST(aqft, operator_distance_matches_reference_values) {
  // frozen from an independent dense-SVD oracle
  struct Reference {
    std::uint32_t n, kmax;
    double distance;
  };
  const Reference refs[] = {
      {4, 2, 1.662939225}, {5, 3, 0.942793474}, {6, 3, 1.481902251}, {7, 4, 0.810482628},
      {8, 4, 1.131463622}, {8, 7, 0.024543077}, {9, 5, 0.592301776}, {10, 6, 0.299529069},
  };
  for (const auto& ref : refs) {
    const double d = operator_distance(build_qft(ref.n, ref.n), build_qft(ref.n, ref.kmax));
    EXPECT_NEAR(d, ref.distance, 2e-5) << "n=" << ref.n << " kmax=" << ref.kmax;
  }
}

TEST(phi_add, forward_sum_example) {
  // m=4: 2 + 3 -> 5
  const auto out = add_mod_power_of_two(4, 3, 0b0010);
  EXPECT_GE(testsupport::basis_probability(out, 0b0101), 1.0 - 1e-9);
}

TEST(phi_add, zero_addend_is_identity_with_full_gate_count) {
  const Circuit adder = build_phi_add_const(4, 0);
  EXPECT_EQ(adder.gates.size(), 4u);  // still one rotation slot per qubit
  for (const Gate& g : adder.gates) EXPECT_TRUE(g.angle->is_zero());
  for (std::uint64_t b = 0; b < 16; ++b) {
    const auto out = add_mod_power_of_two(4, 0, b);
    EXPECT_GE(testsupport::basis_probability(out, b), 1.0 - 1e-9);
  }
}

TEST(phi_add, inverse_adder_underflow_sets_top_qubit) {
  // b=2, a=5, m=4: wraps to 2^4 - 3 = 13, top qubit reads 1
  const auto out = add_mod_power_of_two(4, 5, 2, /*inverse=*/true);
  EXPECT_GE(testsupport::basis_probability(out, 13), 1.0 - 1e-9);
  EXPECT_GE(out.probability_one(3), 1.0 - 1e-9);
}

TEST(phi_add, exhaustive_small_widths) {
  for (std::uint32_t m = 2; m <= 3; ++m) {
    const std::uint64_t size = std::uint64_t{1} << m;
    for (std::uint64_t a = 0; a < size; ++a) {
      for (std::uint64_t b = 0; b < size; ++b) {
        const auto sum = add_mod_power_of_two(m, a, b);
        ASSERT_GE(testsupport::basis_probability(sum, (a + b) % size), 1.0 - 1e-9);
        const auto diff = add_mod_power_of_two(m, a, b, /*inverse=*/true);
        ASSERT_GE(testsupport::basis_probability(diff, (b + size - a) % size), 1.0 - 1e-9);
      }
    }
  }
}

TEST(phi_add, angle_sign_mutation_is_caught_by_the_oracle) {
  // flip one rotation's sign and the adder oracle must notice
  Circuit broken = build_phi_add_const(4, 5);
  broken.gates[1].angle = broken.gates[1].angle->negated();
  Circuit c(4);
  const Circuit qft = build_qft(4, 4);
  c.append(qft);
  c.append(broken);
  c.append(invert_circuit(qft));
  const auto out = testsupport::run_on_basis(c, 2);
  EXPECT_LT(testsupport::basis_probability(out, (5 + 2) % 16), 1.0 - 1e-9);
}

TEST(phi_add, rejects_oversized_addend) {
  EXPECT_THROW(build_phi_add_const(3, 8), std::invalid_argument);
  EXPECT_NO_THROW(build_phi_add_const(3, 7));
}

TEST(cc_phi_add_mod, worked_examples) {
  // layout: b [0..n], ancilla n+1, controls n+2 and n+3
  const std::uint32_t n = 3;
  const std::uint64_t modulus = 7;
  const std::uint32_t m = n + 1;
  const std::uint64_t both_controls = (std::uint64_t{1} << (m + 1)) | (std::uint64_t{1} << (m + 2));
  const Circuit qft = build_qft(m, m);
  std::vector<std::uint32_t> b_map = {0, 1, 2, 3};

  auto run_mod_add = [&](std::uint64_t a, std::uint64_t b, std::uint64_t controls) {
    Circuit c(n + 4);
    c.append(qft, b_map);
    c.append(build_cc_phi_add_mod(n, a, modulus, m));
    c.append(invert_circuit(qft), b_map);
    return testsupport::run_on_basis(c, b | controls);
  };

  // 5 + 4 mod 7 = 2
  auto out = run_mod_add(5, 4, both_controls);
  EXPECT_GE(testsupport::basis_probability(out, 2 | both_controls), 1.0 - 1e-9);
  EXPECT_LE(out.probability_one(m), 1e-9);  // ancilla clean

  // 3 + 2 mod 7 = 5
  out = run_mod_add(3, 2, both_controls);
  EXPECT_GE(testsupport::basis_probability(out, 5 | both_controls), 1.0 - 1e-9);

  // any control off: identity
  for (std::uint64_t controls :
       {std::uint64_t{0}, std::uint64_t{1} << (m + 1), std::uint64_t{1} << (m + 2)}) {
    out = run_mod_add(5, 4, controls);
    EXPECT_GE(testsupport::basis_probability(out, 4 | controls), 1.0 - 1e-9);
  }
}

TEST(cc_phi_add_mod, rejections) {
  EXPECT_THROW(build_cc_phi_add_mod(3, 7, 7, 4), std::invalid_argument);   // a >= N
  EXPECT_THROW(build_cc_phi_add_mod(3, 2, 8, 4), std::invalid_argument);   // even N
  EXPECT_THROW(build_cc_phi_add_mod(3, 2, 3, 4), std::invalid_argument);   // N not 3 bits
  EXPECT_THROW(build_cc_phi_add_mod(3, 2, 7, 0), std::invalid_argument);   // kmax
}

TEST(cmult_mod, worked_examples) {
  const std::uint32_t n = 3;
  const std::uint64_t modulus = 7;
  const std::uint64_t control = std::uint64_t{1} << (2 * n + 2);
  const Circuit c = build_cmult_mod(n, 4, modulus, n + 1);
  ASSERT_EQ(c.num_qubits, 2 * n + 3);

  auto pack = [&](std::uint64_t x, std::uint64_t b) { return x | (b << n); };

  // c=1, x=3, b=2: b' = (2 + 4*3) mod 7 = 0
  auto out = testsupport::run_on_basis(c, pack(3, 2) | control);
  EXPECT_GE(testsupport::basis_probability(out, pack(3, 0) | control), 1.0 - 1e-9);

  // control off: unchanged, for every in-range basis input
  for (std::uint64_t x = 0; x < modulus; ++x) {
    for (std::uint64_t b = 0; b < modulus; ++b) {
      out = testsupport::run_on_basis(c, pack(x, b));
      ASSERT_GE(testsupport::basis_probability(out, pack(x, b)), 1.0 - 1e-9);
    }
  }

  // x=0 adds nothing
  out = testsupport::run_on_basis(c, pack(0, 5) | control);
  EXPECT_GE(testsupport::basis_probability(out, pack(0, 5) | control), 1.0 - 1e-9);
}

TEST(controlled_swap_register, semantics_and_counts) {
  const std::uint32_t n = 3;
  const Circuit c = build_controlled_swap_register(n);
  EXPECT_EQ(c.gates.size(), 3u * n);
  const GateCounts counts = count_gates(c);
  EXPECT_EQ(counts[GateKind::Cnot], 2u * n);
  EXPECT_EQ(counts[GateKind::Toffoli], n);

  const std::uint64_t control = std::uint64_t{1} << (2 * n);
  auto pack = [&](std::uint64_t x, std::uint64_t y) { return x | (y << n); };

  // control on: (x=5, y=2) -> (2, 5)
  auto out = testsupport::run_on_basis(c, pack(5, 2) | control);
  EXPECT_GE(testsupport::basis_probability(out, pack(2, 5) | control), 1.0 - 1e-9);

  // control off: identity on all basis states
  for (std::uint64_t basis = 0; basis < (std::uint64_t{1} << (2 * n)); ++basis) {
    out = testsupport::run_on_basis(c, basis);
    ASSERT_GE(testsupport::basis_probability(out, basis), 1.0 - 1e-9);
  }
}

TEST(controlled_ua, worked_examples) {
  const std::uint32_t n = 3;
  const std::uint64_t modulus = 7;
  const std::uint64_t control = std::uint64_t{1} << (2 * n + 2);
  const Circuit c = build_controlled_ua(n, 4, modulus, n + 1);
  ASSERT_EQ(c.num_qubits, 2 * n + 3);

  // x=3 -> (4*3) mod 7 = 5, work registers back to zero
  auto out = testsupport::run_on_basis(c, 3 | control);
  EXPECT_GE(testsupport::basis_probability(out, 5 | control), 1.0 - 1e-9);

  // control off: identity
  out = testsupport::run_on_basis(c, 3);
  EXPECT_GE(testsupport::basis_probability(out, 3), 1.0 - 1e-9);

  // a=1: identity on x < N
  const Circuit id = build_controlled_ua(n, 1, modulus, n + 1);
  for (std::uint64_t x = 0; x < modulus; ++x) {
    out = testsupport::run_on_basis(id, x | control);
    ASSERT_GE(testsupport::basis_probability(out, x | control), 1.0 - 1e-9);
  }
}

TEST(controlled_ua, composition_matches_product) {
  const std::uint32_t n = 3;
  const std::uint64_t modulus = 7;
  const std::uint64_t control = std::uint64_t{1} << (2 * n + 2);
  const Circuit u3 = build_controlled_ua(n, 3, modulus, n + 1);
  const Circuit u5 = build_controlled_ua(n, 5, modulus, n + 1);
  const Circuit u15 = build_controlled_ua(n, 3 * 5 % modulus, modulus, n + 1);
  for (std::uint64_t x = 0; x < modulus; ++x) {
    Circuit chained(u3.num_qubits);
    chained.append(u5);
    chained.append(u3);
    const auto lhs = testsupport::run_on_basis(chained, x | control);
    const auto rhs = testsupport::run_on_basis(u15, x | control);
    ASSERT_GE(fidelity(lhs.amplitudes(), rhs.amplitudes()), 1.0 - 1e-9) << "x=" << x;
  }
}

TEST(controlled_ua, rejects_non_coprime_naming_the_factor) {
  try {
    build_controlled_ua(4, 6, 15, 5);
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("gcd(6, 15) = 3"), std::string::npos) << e.what();
  }
}

TEST(blocks, invert_round_trips) {
  const Circuit blocks[] = {
      build_qft(4, 3),
      build_phi_add_const(4, 9, 2),
      build_cc_phi_add_mod(3, 4, 7, 4),
      build_cmult_mod(3, 5, 7, 4),
      build_controlled_swap_register(2),
      build_controlled_ua(3, 5, 7, 4),
  };
  std::mt19937_64 prng(2);
  for (const Circuit& block : blocks) {
    Circuit round_trip(block.num_qubits);
    round_trip.append(block);
    round_trip.append(invert_circuit(block));
    for (int trial = 0; trial < 5; ++trial) {
      const std::uint64_t basis = prng() & ((std::uint64_t{1} << block.num_qubits) - 1);
      const auto out = testsupport::run_on_basis(round_trip, basis);
      ASSERT_GE(testsupport::basis_probability(out, basis), 1.0 - 1e-9);
    }
  }
}

TEST(blocks, exact_kmax_suites_pass) {
  // compact versions of the exhaustive verification suites
  const std::uint64_t moduli[] = {7};
  const SuiteResult cua = run_cua_suite(moduli);
  EXPECT_EQ(cua.failures, 0u) << (cua.messages.empty() ? "" : cua.messages.front());
}
