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

// Adds a classical constant to a quantum register in the Fourier basis and
// reads the sum back out.

#include <iostream>

#include "qshor/blocks.hpp"
#include "qshor/simulator.hpp"

int main() {
  const std::uint32_t width = 5;
  const std::uint64_t addend = 11;
  const std::uint64_t start = 7;

  qshor::Circuit c(width);
  const qshor::Circuit qft = qshor::build_qft(width, width);
  c.append(qft);
  c.append(qshor::build_phi_add_const(width, addend));
  c.append(qshor::invert_circuit(qft));

  qshor::CountingRng rng(0);
  const auto result = qshor::run_circuit(c, qshor::init_basis_state(width, start), rng);

  std::cout << start << " + " << addend << " mod " << (1u << width) << " = ";
  const auto amps = result.final_state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (std::norm(amps[i]) > 0.5) {
      std::cout << i << "\n";
      return 0;
    }
  }
  std::cout << "?\n";
  return 1;
}
