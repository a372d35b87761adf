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
  \file gate.hpp
  \brief Gate vocabulary: kinds, exact dyadic phase angles, and constructors.
*/

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qshor {

enum class GateKind : std::uint8_t {
  X,
  H,
  Phase,
  CPhase,
  CCPhase,
  Cnot,
  Toffoli,
  Swap,
  CSwap,
  Measure,
  ClassicalX,
  ClassicalPhase,
};

inline constexpr std::size_t kNumGateKinds = 12;

inline constexpr std::array<std::string_view, kNumGateKinds> kGateKindNames = {
    "X",       "H",       "Phase", "CPhase",  "CCPhase",    "CNOT",
    "Toffoli", "Swap",    "CSwap", "Measure", "ClassicalX", "ClassicalPhase"};

inline std::string_view gate_kind_name(GateKind kind) {
  return kGateKindNames[static_cast<std::size_t>(kind)];
}

inline GateKind gate_kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumGateKinds; ++i) {
    if (kGateKindNames[i] == name) return static_cast<GateKind>(i);
  }
  throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

inline bool is_phase_kind(GateKind kind) {
  return kind == GateKind::Phase || kind == GateKind::CPhase ||
         kind == GateKind::CCPhase || kind == GateKind::ClassicalPhase;
}

/// Kinds whose execution depends on a classical bit or produces one.
inline bool is_nonunitary_kind(GateKind kind) {
  return kind == GateKind::Measure || kind == GateKind::ClassicalX ||
         kind == GateKind::ClassicalPhase;
}

inline bool is_self_inverse_kind(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::Cnot:
    case GateKind::Toffoli:
    case GateKind::Swap:
    case GateKind::CSwap:
      return true;
    default:
      return false;
  }
}

inline std::size_t kind_target_count(GateKind kind) {
  return (kind == GateKind::Swap || kind == GateKind::CSwap) ? 2 : 1;
}

inline std::size_t kind_control_count(GateKind kind) {
  switch (kind) {
    case GateKind::CPhase:
    case GateKind::Cnot:
    case GateKind::CSwap:
      return 1;
    case GateKind::CCPhase:
    case GateKind::Toffoli:
      return 2;
    default:
      return 0;
  }
}

/*! \brief An exact phase angle: 2*pi * num / 2^den_pow2.

  All angles in the Fourier-arithmetic blocks are dyadic fractions of a full
  turn, so storing the reduced fraction keeps inversion and gate comparison
  exact. Canonical form: num in [0, 2^den_pow2) and odd (or the zero angle).
*/
struct DyadicAngle {
  std::int64_t num = 0;
  int den_pow2 = 0;

  static DyadicAngle make(std::int64_t num, int den_pow2) {
    if (den_pow2 < 0 || den_pow2 > 62) {
      throw std::invalid_argument("dyadic angle denominator exponent out of range: " +
                                  std::to_string(den_pow2));
    }
    const std::int64_t den = std::int64_t{1} << den_pow2;
    num %= den;
    if (num < 0) num += den;
    while (num != 0 && (num & 1) == 0) {
      num >>= 1;
      --den_pow2;
    }
    if (num == 0) den_pow2 = 0;
    return DyadicAngle{num, den_pow2};
  }

  DyadicAngle negated() const { return make(-num, den_pow2); }

  double radians() const {
    return 2.0 * 3.14159265358979323846 * std::ldexp(static_cast<double>(num), -den_pow2);
  }

  bool is_zero() const { return num == 0; }

  friend bool operator==(const DyadicAngle&, const DyadicAngle&) = default;
};

/*! \brief One quantum instruction.

  Targets and controls are qubit indices (0 = least significant bit of a
  basis index). Phase kinds carry an angle; Measure writes `clbit`;
  ClassicalX/ClassicalPhase fire iff classical bit `condition` reads 1.
*/
struct Gate {
  GateKind kind;
  std::vector<std::uint32_t> targets;
  std::vector<std::uint32_t> controls;
  std::optional<DyadicAngle> angle;
  std::optional<std::uint32_t> condition;
  std::optional<std::uint32_t> clbit;

  static Gate x(std::uint32_t t) { return {GateKind::X, {t}, {}, {}, {}, {}}; }
  static Gate h(std::uint32_t t) { return {GateKind::H, {t}, {}, {}, {}, {}}; }
  static Gate phase(std::uint32_t t, DyadicAngle a) {
    return {GateKind::Phase, {t}, {}, a, {}, {}};
  }
  static Gate cphase(std::uint32_t c, std::uint32_t t, DyadicAngle a) {
    return {GateKind::CPhase, {t}, {c}, a, {}, {}};
  }
  static Gate ccphase(std::uint32_t c1, std::uint32_t c2, std::uint32_t t, DyadicAngle a) {
    return {GateKind::CCPhase, {t}, {c1, c2}, a, {}, {}};
  }
  static Gate cnot(std::uint32_t c, std::uint32_t t) {
    return {GateKind::Cnot, {t}, {c}, {}, {}, {}};
  }
  static Gate toffoli(std::uint32_t c1, std::uint32_t c2, std::uint32_t t) {
    return {GateKind::Toffoli, {t}, {c1, c2}, {}, {}, {}};
  }
  static Gate swap(std::uint32_t t1, std::uint32_t t2) {
    return {GateKind::Swap, {t1, t2}, {}, {}, {}, {}};
  }
  static Gate cswap(std::uint32_t c, std::uint32_t t1, std::uint32_t t2) {
    return {GateKind::CSwap, {t1, t2}, {c}, {}, {}, {}};
  }
  static Gate measure(std::uint32_t t, std::uint32_t clbit) {
    return {GateKind::Measure, {t}, {}, {}, {}, clbit};
  }
  static Gate classical_x(std::uint32_t t, std::uint32_t condition) {
    return {GateKind::ClassicalX, {t}, {}, {}, condition, {}};
  }
  static Gate classical_phase(std::uint32_t t, DyadicAngle a, std::uint32_t condition) {
    return {GateKind::ClassicalPhase, {t}, {}, a, condition, {}};
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

}  // namespace qshor
