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
  \file blocks.hpp
  \brief Generators for the Fourier-arithmetic building blocks: QFT/AQFT,
         constant adders, the doubly controlled modular adder, the controlled
         multiplier, register-controlled swap, and controlled modular
         multiplication (C-U_a).

  Conventions used by every block here:

  - Swapless QFT. After build_qft, qubit j of an m-qubit register holds the
    relative phase exp(2*pi*i * b / 2^(j+1)); no terminal swap network is
    emitted, and all Fourier-basis arithmetic uses this same bit order.
  - phi(b) denotes a register carrying that Fourier encoding of the integer b.
  - Registers are little-endian and contiguous. The 2n+3-qubit multiplier
    blocks lay wires out as
        x register   qubits [0, n)
        b register   qubits [n, 2n]   (overflow qubit 2n on top)
        ancilla      qubit  2n+1
        control      qubit  2n+2
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qshor/circuit.hpp"
#include "qshor/numtheory.hpp"

namespace qshor {

namespace detail {

inline void check_modulus(std::uint32_t n, std::uint64_t modulus) {
  if (n < 2 || n > 32) {
    throw std::invalid_argument("register width n out of range: " + std::to_string(n));
  }
  if (modulus < 3 || modulus % 2 == 0) {
    throw std::invalid_argument("modulus must be odd and at least 3");
  }
  if (modulus < (std::uint64_t{1} << (n - 1)) || modulus >= (std::uint64_t{1} << n)) {
    throw std::invalid_argument("modulus " + std::to_string(modulus) + " is not an " +
                                std::to_string(n) + "-bit number");
  }
}

inline std::uint32_t clamp_kmax(std::uint32_t kmax, std::uint32_t width) {
  if (kmax < 1) throw std::invalid_argument("kmax must be at least 1");
  return std::min(kmax, width);
}

}  // namespace detail

/*! \brief Quantum Fourier transform on `width` qubits, rotations with
  k > kmax omitted.

  H on each qubit, high index first, interleaved with CPhase(2*pi/2^k) from
  the k-1 qubits below. kmax = width gives the exact transform; smaller kmax
  gives the truncated approximation.
*/
inline Circuit build_qft(std::uint32_t width, std::uint32_t kmax) {
  if (width < 1) throw std::invalid_argument("build_qft needs width >= 1");
  kmax = detail::clamp_kmax(kmax, width);
  Circuit c(width);
  for (std::uint32_t i = width; i-- > 0;) {
    c.add(Gate::h(i));
    const std::uint32_t k_hi = std::min(i + 1, kmax);
    for (std::uint32_t k = 2; k <= k_hi; ++k) {
      c.add(Gate::cphase(i - k + 1, i, DyadicAngle::make(1, static_cast<int>(k))));
    }
  }
  return c;
}

/*! \brief Fourier-space addition of the classical constant `addend`.

  Exactly `width` phase gates: qubit j gets Phase(2*pi*addend/2^(j+1)), the
  per-gate product of the controlled rotations a quantum-addend adder would
  need, precomputed since the addend is classical. Gains num_controls (0..2)
  controls on fresh wires width, width+1. Sandwiched between build_qft(width)
  and its inverse the block maps |b> to |(addend+b) mod 2^width>.
*/
inline Circuit build_phi_add_const(std::uint32_t width, std::uint64_t addend,
                                   int num_controls = 0) {
  if (width < 1 || width > 62) {
    throw std::invalid_argument("build_phi_add_const width out of range");
  }
  if (addend >= (std::uint64_t{1} << width)) {
    throw std::invalid_argument("addend " + std::to_string(addend) +
                                " does not fit in " + std::to_string(width) + " bits");
  }
  if (num_controls < 0 || num_controls > 2) {
    throw std::invalid_argument("num_controls must be 0, 1 or 2");
  }
  Circuit c(width);
  for (std::uint32_t j = 0; j < width; ++j) {
    const auto angle = DyadicAngle::make(
        static_cast<std::int64_t>(addend & ((std::uint64_t{2} << j) - 1)),
        static_cast<int>(j + 1));
    c.add(Gate::phase(j, angle));
  }
  if (num_controls == 0) return c;
  std::vector<std::uint32_t> ctrls;
  for (int i = 0; i < num_controls; ++i) ctrls.push_back(width + static_cast<std::uint32_t>(i));
  return add_controls(c, ctrls);
}

/*! \brief Doubly controlled modular adder on n+4 qubits:
  phi(b) -> phi((a+b) mod N) for b < N when both controls read 1, identity
  otherwise, with the ancilla returned to |0>.

  Wire layout (local indices): b register [0, n], ancilla n+1, controls n+2
  and n+3. The block expects and returns the b register in the Fourier basis;
  internal inverse-QFT/QFT pairs expose the top qubit for the two comparisons
  ((a+b)-N < 0, then (a+b) mod N - a < 0) that set and clear the ancilla.
*/
inline Circuit build_cc_phi_add_mod(std::uint32_t n, std::uint64_t a, std::uint64_t modulus,
                                    std::uint32_t kmax) {
  detail::check_modulus(n, modulus);
  if (a >= modulus) {
    throw std::invalid_argument("addend " + std::to_string(a) +
                                " must be smaller than the modulus " + std::to_string(modulus));
  }
  const std::uint32_t m = n + 1;
  kmax = detail::clamp_kmax(kmax, m);
  const std::uint32_t top = n;        // overflow qubit of the b register
  const std::uint32_t ancilla = m;
  const std::uint32_t c1 = m + 1;
  const std::uint32_t c2 = m + 2;

  const Circuit dc_add_a = build_phi_add_const(m, a, 2);        // controls at m, m+1 -> c1, c2
  const Circuit add_modulus = build_phi_add_const(m, modulus);
  const Circuit c_add_modulus = build_phi_add_const(m, modulus, 1);  // control at m -> ancilla
  const Circuit qft = build_qft(m, kmax);
  const Circuit iqft = invert_circuit(qft);

  std::vector<std::uint32_t> b_map(m);
  for (std::uint32_t j = 0; j < m; ++j) b_map[j] = j;
  std::vector<std::uint32_t> dc_map = b_map;
  dc_map.push_back(c1);
  dc_map.push_back(c2);
  std::vector<std::uint32_t> anc_map = b_map;
  anc_map.push_back(ancilla);

  Circuit c(n + 4);
  c.append(dc_add_a, dc_map);
  c.append(invert_circuit(add_modulus), b_map);
  c.append(iqft, b_map);
  c.add(Gate::cnot(top, ancilla));
  c.append(qft, b_map);
  c.append(c_add_modulus, anc_map);
  c.append(invert_circuit(dc_add_a), dc_map);
  c.append(iqft, b_map);
  c.add(Gate::x(top));
  c.add(Gate::cnot(top, ancilla));
  c.add(Gate::x(top));
  c.append(qft, b_map);
  c.append(dc_add_a, dc_map);
  return c;
}

/*! \brief Controlled multiplier on 2n+3 qubits:
  |c=1>|x>|b> -> |c>|x>|(b + a*x) mod N> for b < N, identity when c = 0.

  n doubly controlled modular adders, the i-th adding (2^i * a) mod N under
  controls (global control, x_i), with the b-register QFT applied once before
  the chain and its inverse once after. Coprimality of a and N is not needed
  here, only a < N.
*/
inline Circuit build_cmult_mod(std::uint32_t n, std::uint64_t a, std::uint64_t modulus,
                               std::uint32_t kmax) {
  detail::check_modulus(n, modulus);
  if (a >= modulus) {
    throw std::invalid_argument("multiplier " + std::to_string(a) +
                                " must be smaller than the modulus " + std::to_string(modulus));
  }
  const std::uint32_t m = n + 1;
  const std::uint32_t ancilla = 2 * n + 1;
  const std::uint32_t control = 2 * n + 2;

  std::vector<std::uint32_t> b_map(m);
  for (std::uint32_t j = 0; j < m; ++j) b_map[j] = n + j;

  Circuit c(2 * n + 3);
  const Circuit qft = build_qft(m, kmax);
  c.append(qft, b_map);
  std::uint64_t shifted = a % modulus;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> adder_map = b_map;
    adder_map.push_back(ancilla);
    adder_map.push_back(control);  // c1: the multiplier's global control
    adder_map.push_back(i);        // c2: x_i
    c.append(build_cc_phi_add_mod(n, shifted, modulus, kmax), adder_map);
    shifted = shifted * 2 % modulus;
  }
  c.append(invert_circuit(qft), b_map);
  return c;
}

/*! \brief Swaps two n-qubit registers under one control: qubits [0, n) with
  [n, 2n), control 2n. Each pair is CNOT, Toffoli, CNOT — exactly 3n gates.
*/
inline Circuit build_controlled_swap_register(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("build_controlled_swap_register needs n >= 1");
  const std::uint32_t control = 2 * n;
  Circuit c(2 * n + 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t x = i;
    const std::uint32_t y = n + i;
    c.add(Gate::cnot(y, x));
    c.add(Gate::toffoli(control, x, y));
    c.add(Gate::cnot(y, x));
  }
  return c;
}

/*! \brief Controlled modular multiplication on 2n+3 qubits:
  |c=1>|x>|0> -> |c>|(a*x) mod N>|0> for x < N, identity when c = 0.

  CMULT(a) computes (a*x) mod N into the b register; the controlled register
  swap moves it into x (only the low n qubits — the overflow qubit is always
  0 here); the inverse of CMULT(a^-1) clears the b register back to 0 using
  the classically computed inverse of a modulo N.
*/
inline Circuit build_controlled_ua(std::uint32_t n, std::uint64_t a, std::uint64_t modulus,
                                   std::uint32_t kmax) {
  detail::check_modulus(n, modulus);
  if (a >= modulus) {
    throw std::invalid_argument("multiplier " + std::to_string(a) +
                                " must be smaller than the modulus " + std::to_string(modulus));
  }
  const std::uint64_t g = gcd_u64(a, modulus);
  if (g != 1) {
    throw std::invalid_argument("gcd(" + std::to_string(a) + ", " + std::to_string(modulus) +
                                ") = " + std::to_string(g) +
                                "; controlled multiplication needs a coprime multiplier");
  }
  const std::uint64_t a_inverse = *mod_inverse(a, modulus);

  Circuit c(2 * n + 3);
  c.append(build_cmult_mod(n, a, modulus, kmax));
  std::vector<std::uint32_t> swap_map(2 * n + 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    swap_map[i] = i;          // x_i
    swap_map[n + i] = n + i;  // low b qubits
  }
  swap_map[2 * n] = 2 * n + 2;  // control
  c.append(build_controlled_swap_register(n), swap_map);
  c.append(invert_circuit(build_cmult_mod(n, a_inverse, modulus, kmax)));
  return c;
}

}  // namespace qshor
