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

#include "qshor/factor.hpp"

#include <gtest/gtest.h>

using namespace qshor;

TEST(shor_factor, even_route_fires_first) {
  const FactorizationResult r = shor_factor(16, {});
  ASSERT_TRUE(r.factor.has_value());
  EXPECT_EQ(*r.factor, 2u);
  EXPECT_EQ(r.route, FactorRoute::Even);
  EXPECT_TRUE(r.attempts.empty());
}

TEST(shor_factor, perfect_power_route) {
  const FactorizationResult r = shor_factor(27, {});
  ASSERT_TRUE(r.factor.has_value());
  EXPECT_EQ(*r.factor, 3u);
  EXPECT_EQ(r.route, FactorRoute::PerfectPower);
}

TEST(shor_factor, lucky_gcd_route) {
  FactorConfig config;
  config.forced_base = 5;
  const FactorizationResult r = shor_factor(15, config);
  ASSERT_TRUE(r.factor.has_value());
  EXPECT_EQ(*r.factor, 5u);
  EXPECT_EQ(r.route, FactorRoute::LuckyGcd);
  ASSERT_EQ(r.attempts.size(), 1u);
  EXPECT_EQ(r.attempts[0].outcome, "lucky-gcd");
}

TEST(shor_factor, n15_forced_base7_goes_through_order_finding) {
  FactorConfig config;
  config.seed = 1;
  config.forced_base = 7;
  const FactorizationResult r = shor_factor(15, config);
  ASSERT_TRUE(r.factor.has_value());
  EXPECT_TRUE(*r.factor == 3 || *r.factor == 5) << *r.factor;
  EXPECT_EQ(r.route, FactorRoute::OrderFinding);
  ASSERT_FALSE(r.attempts.empty());
  const FactorAttempt& last = r.attempts.back();
  EXPECT_EQ(last.outcome, "factor");
  ASSERT_TRUE(last.order.has_value());
  EXPECT_EQ(*last.order, 4u);  // order of 7 modulo 15
}

TEST(shor_factor, n21_forced_base2_recovers_order_six) {
  FactorConfig config;
  config.seed = 0;
  config.forced_base = 2;
  config.max_attempts = 20;
  const FactorizationResult r = shor_factor(21, config);
  ASSERT_TRUE(r.factor.has_value());
  EXPECT_TRUE(*r.factor == 3 || *r.factor == 7) << *r.factor;
  EXPECT_EQ(r.route, FactorRoute::OrderFinding);
  ASSERT_TRUE(r.attempts.back().order.has_value());
  EXPECT_EQ(*r.attempts.back().order, 6u);
}

TEST(shor_factor, base_with_half_power_minus_one_exhausts) {
  // 14 = -1 mod 15 has order two and a^(r/2) = -1: every attempt is rejected
  FactorConfig config;
  config.seed = 9;
  config.forced_base = 14;
  const FactorizationResult r = shor_factor(15, config);
  EXPECT_FALSE(r.factor.has_value());
  EXPECT_FALSE(r.route.has_value());
  EXPECT_EQ(r.attempts.size(), 10u);  // default budget
  for (const auto& attempt : r.attempts) {
    EXPECT_TRUE(attempt.outcome == "a^(r/2) = -1 (mod N)" ||
                attempt.outcome == "no order recovered")
        << attempt.outcome;
  }
}

TEST(shor_factor, factors_are_nontrivial_divisors) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    FactorConfig config;
    config.seed = seed;
    const FactorizationResult r = shor_factor(15, config);
    if (r.factor) {
      EXPECT_GT(*r.factor, 1u);
      EXPECT_LT(*r.factor, 15u);
      EXPECT_EQ(15 % *r.factor, 0u);
    }
  }
}

TEST(shor_factor, deterministic_per_seed) {
  FactorConfig config;
  config.seed = 123;
  const FactorizationResult a = shor_factor(21, config);
  const FactorizationResult b = shor_factor(21, config);
  EXPECT_EQ(a.factor, b.factor);
  ASSERT_EQ(a.attempts.size(), b.attempts.size());
  for (std::size_t i = 0; i < a.attempts.size(); ++i) {
    EXPECT_EQ(a.attempts[i].base, b.attempts[i].base);
    EXPECT_EQ(a.attempts[i].outcome, b.attempts[i].outcome);
  }
}

TEST(shor_factor, rejects_tiny_inputs) {
  EXPECT_THROW(shor_factor(3, {}), std::invalid_argument);
}

TEST(shor_factor, wider_moduli_smoke) {
  // six-bit moduli run on 15 qubits end to end
  for (std::uint64_t n : {33u, 35u}) {
    FactorConfig config;
    config.seed = 4;
    const FactorizationResult r = shor_factor(n, config);
    ASSERT_TRUE(r.factor.has_value()) << n;
    EXPECT_GT(*r.factor, 1u);
    EXPECT_LT(*r.factor, n);
    EXPECT_EQ(n % *r.factor, 0u);
  }
}

TEST(shor_factor, json_report) {
  FactorConfig config;
  config.seed = 1;
  config.forced_base = 7;
  const auto j = factorization_to_json(shor_factor(15, config));
  EXPECT_EQ(j.at("input"), 15);
  EXPECT_TRUE(j.at("factor") == 3 || j.at("factor") == 5);
  EXPECT_EQ(j.at("route"), "order-finding");
  EXPECT_GE(j.at("attempts").size(), 1u);
  EXPECT_EQ(j.at("attempts").back().at("outcome"), "factor");
}
