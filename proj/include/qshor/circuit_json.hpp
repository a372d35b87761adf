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

// JSON circuit format:
//   {num_qubits, num_clbits,
//    gates: [{kind, targets, controls, angle_num, angle_den_pow2, condition, clbit}]}
// All fields are integers or strings, so round-trips are bit-exact.

#pragma once

#include <nlohmann/json.hpp>

#include "qshor/circuit.hpp"

namespace qshor {

inline nlohmann::json circuit_to_json(const Circuit& c) {
  nlohmann::json j;
  j["num_qubits"] = c.num_qubits;
  j["num_clbits"] = c.num_clbits;
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates) {
    nlohmann::json jg;
    jg["kind"] = gate_kind_name(g.kind);
    jg["targets"] = g.targets;
    jg["controls"] = g.controls;
    if (g.angle) {
      jg["angle_num"] = g.angle->num;
      jg["angle_den_pow2"] = g.angle->den_pow2;
    }
    if (g.condition) jg["condition"] = *g.condition;
    if (g.clbit) jg["clbit"] = *g.clbit;
    gates.push_back(std::move(jg));
  }
  j["gates"] = std::move(gates);
  return j;
}

inline Circuit circuit_from_json(const nlohmann::json& doc) {
  // Accept both a bare circuit document and one wrapped next to a metadata
  // header, as written by `qshor emit`.
  const nlohmann::json& j = doc.contains("circuit") ? doc.at("circuit") : doc;
  Circuit c(j.at("num_qubits").get<std::uint32_t>(), j.at("num_clbits").get<std::uint32_t>());
  for (const auto& jg : j.at("gates")) {
    Gate g;
    g.kind = gate_kind_from_name(jg.at("kind").get<std::string>());
    g.targets = jg.at("targets").get<std::vector<std::uint32_t>>();
    g.controls = jg.at("controls").get<std::vector<std::uint32_t>>();
    if (jg.contains("angle_num")) {
      g.angle = DyadicAngle::make(jg.at("angle_num").get<std::int64_t>(),
                                  jg.at("angle_den_pow2").get<int>());
    }
    if (jg.contains("condition")) g.condition = jg.at("condition").get<std::uint32_t>();
    if (jg.contains("clbit")) g.clbit = jg.at("clbit").get<std::uint32_t>();
    c.add(std::move(g));
  }
  return c;
}

}  // namespace qshor
