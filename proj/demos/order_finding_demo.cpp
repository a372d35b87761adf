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

// Runs semiclassical order finding for a few seeds and shows how the
// continued-fraction postprocessing turns phase readings into the order.

#include <iostream>

#include "qshor/orderfind.hpp"

int main() {
  const std::uint64_t N = 15;
  const std::uint64_t a = 7;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    qshor::CountingRng rng(seed);
    const auto record = qshor::run_semiclassical_order_finding(N, a, 5, rng);
    const auto result = qshor::phase_to_order(record, N, a);
    std::cout << "seed " << seed << ": m = " << record.m << ", phase = " << record.phase;
    if (result.order) {
      std::cout << " -> r = " << *result.order;
    } else {
      std::cout << " -> no order from this reading";
    }
    std::cout << "\n";
  }
  return 0;
}
