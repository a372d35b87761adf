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

// Classical pre/post-processing: gcd, modular inverse and exponentiation,
// perfect-power detection and continued-fraction convergents.

#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qshor {

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
  return std::gcd(a, b);
}

/// Inverse of a modulo N via extended Euclid; empty iff gcd(a, N) != 1.
inline std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t N) {
  if (N < 2) throw std::invalid_argument("mod_inverse requires N >= 2");
  std::int64_t r0 = static_cast<std::int64_t>(N);
  std::int64_t r1 = static_cast<std::int64_t>(a % N);
  std::int64_t x0 = 0, x1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  if (r0 != 1) return std::nullopt;
  x0 %= static_cast<std::int64_t>(N);
  if (x0 < 0) x0 += static_cast<std::int64_t>(N);
  return static_cast<std::uint64_t>(x0);
}

__extension__ typedef unsigned __int128 uint128_t;

/// a^k mod N by square-and-multiply; 128-bit intermediates keep N up to 64 bits safe.
inline std::uint64_t mod_exp(std::uint64_t a, std::uint64_t k, std::uint64_t N) {
  if (N < 2) throw std::invalid_argument("mod_exp requires N >= 2");
  uint128_t result = 1;
  uint128_t base = a % N;
  while (k > 0) {
    if (k & 1) result = result * base % N;
    base = base * base % N;
    k >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

inline int bit_length(std::uint64_t v) {
  int bits = 0;
  while (v) {
    ++bits;
    v >>= 1;
  }
  return bits;
}

namespace detail {

// p^q, or empty on overflow past limit.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t p, int q, std::uint64_t limit) {
  uint128_t v = 1;
  for (int i = 0; i < q; ++i) {
    v *= p;
    if (v > limit) return std::nullopt;
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace detail

/// Smallest base p with p^q = N (q >= 2), or empty if N is no perfect power.
inline std::optional<std::pair<std::uint64_t, int>> is_perfect_power(std::uint64_t N) {
  if (N < 2) throw std::invalid_argument("is_perfect_power requires N >= 2");
  // Scanning exponents downward finds the largest q, hence the smallest base.
  for (int q = bit_length(N) - 1; q >= 2; --q) {
    auto root = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(N), 1.0 / q)));
    for (std::uint64_t p = (root > 1 ? root - 1 : 1); p <= root + 1; ++p) {
      if (p < 2) continue;
      if (auto v = detail::checked_pow(p, q, N); v && *v == N) {
        return std::make_pair(p, q);
      }
    }
  }
  return std::nullopt;
}

/// Convergents (p_k, q_k) of num/den, 0 <= num < den, in expansion order.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> continued_fraction_convergents(
    std::uint64_t num, std::uint64_t den) {
  if (den == 0 || num >= den) {
    throw std::invalid_argument("continued fraction expects 0 <= num < den");
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  std::uint64_t h1 = 1, h2 = 0;  // numerator recurrence
  std::uint64_t k1 = 0, k2 = 1;  // denominator recurrence
  std::uint64_t n = num, d = den;
  while (d != 0) {
    const std::uint64_t term = n / d;
    const std::uint64_t r = n % d;
    n = d;
    d = r;
    const std::uint64_t h = term * h1 + h2;
    const std::uint64_t k = term * k1 + k2;
    out.emplace_back(h, k);
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  return out;
}

}  // namespace qshor
