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

// The classical factoring loop: even / perfect-power shortcuts, random base
// selection, quantum order finding, and the gcd extraction of a factor.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qshor/numtheory.hpp"
#include "qshor/orderfind.hpp"

namespace qshor {

enum class FactorRoute { Even, PerfectPower, LuckyGcd, OrderFinding };

inline std::string_view factor_route_name(FactorRoute r) {
  switch (r) {
    case FactorRoute::Even: return "even";
    case FactorRoute::PerfectPower: return "perfect-power";
    case FactorRoute::LuckyGcd: return "lucky-gcd";
    case FactorRoute::OrderFinding: return "order-finding";
  }
  return "?";
}

struct FactorAttempt {
  std::uint64_t base = 0;
  std::optional<std::uint64_t> order;
  std::string outcome;
};

struct FactorizationResult {
  std::uint64_t input = 0;
  std::optional<std::uint64_t> factor;
  std::optional<FactorRoute> route;
  std::vector<FactorAttempt> attempts;
};

struct FactorConfig {
  std::uint64_t seed = 0;
  int max_attempts = 10;
  std::optional<std::uint64_t> forced_base;
  std::optional<std::uint32_t> kmax;  // empty: exact for n <= 8, ceil(lg n)+2 above
  int workers = 1;
};

/*! \brief Full factoring pipeline for composite N >= 4.

  One seeded generator drives both the random base choices and every
  measurement, so a seed reproduces the whole run. Returns a nontrivial
  factor, or an empty factor with the attempt log once max_attempts quantum
  attempts are exhausted (a prime input always exhausts; primality testing is
  the caller's concern).
*/
inline FactorizationResult shor_factor(std::uint64_t N, const FactorConfig& config) {
  if (N < 4) throw std::invalid_argument("shor_factor requires N >= 4");
  FactorizationResult result;
  result.input = N;

  if (N % 2 == 0) {
    result.factor = 2;
    result.route = FactorRoute::Even;
    return result;
  }
  if (auto power = is_perfect_power(N)) {
    result.factor = power->first;
    result.route = FactorRoute::PerfectPower;
    return result;
  }

  const std::uint32_t n = static_cast<std::uint32_t>(bit_length(N));
  const std::uint32_t kmax = config.kmax ? *config.kmax : default_kmax(n);
  CountingRng rng(config.seed);

  for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
    const std::uint64_t a =
        config.forced_base ? *config.forced_base : rng.uniform_int(2, N - 2);
    FactorAttempt log;
    log.base = a;

    const std::uint64_t g = gcd_u64(a, N);
    if (g > 1) {
      log.outcome = "lucky-gcd";
      result.attempts.push_back(std::move(log));
      result.factor = g;
      result.route = FactorRoute::LuckyGcd;
      return result;
    }

    const MeasurementRecord record = run_semiclassical_order_finding(N, a, kmax, rng,
                                                                     config.workers);
    const OrderResult order = phase_to_order(record, N, a);
    if (!order.order) {
      log.outcome = "no order recovered";
      result.attempts.push_back(std::move(log));
      continue;
    }
    const std::uint64_t r = *order.order;
    log.order = r;
    if (r % 2 != 0) {
      log.outcome = "odd order";
      result.attempts.push_back(std::move(log));
      continue;
    }
    const std::uint64_t half_power = mod_exp(a, r / 2, N);
    if (half_power == N - 1) {
      log.outcome = "a^(r/2) = -1 (mod N)";
      result.attempts.push_back(std::move(log));
      continue;
    }
    for (std::uint64_t candidate :
         {gcd_u64(half_power - 1, N), gcd_u64(half_power + 1, N)}) {
      if (candidate > 1 && candidate < N) {
        log.outcome = "factor";
        result.attempts.push_back(std::move(log));
        result.factor = candidate;
        result.route = FactorRoute::OrderFinding;
        return result;
      }
    }
    log.outcome = "trivial gcds";
    result.attempts.push_back(std::move(log));
  }
  return result;  // attempts exhausted, factor absent
}

inline nlohmann::json factorization_to_json(const FactorizationResult& r) {
  nlohmann::json j;
  j["input"] = r.input;
  j["factor"] = r.factor ? nlohmann::json(*r.factor) : nlohmann::json(nullptr);
  j["route"] = r.route ? nlohmann::json(factor_route_name(*r.route)) : nlohmann::json(nullptr);
  nlohmann::json attempts = nlohmann::json::array();
  for (const auto& a : r.attempts) {
    nlohmann::json ja;
    ja["a"] = a.base;
    ja["r"] = a.order ? nlohmann::json(*a.order) : nlohmann::json(nullptr);
    ja["outcome"] = a.outcome;
    attempts.push_back(std::move(ja));
  }
  j["attempts"] = std::move(attempts);
  return j;
}

}  // namespace qshor
