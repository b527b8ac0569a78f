// Copyright 2026 The qutil Authors
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

#pragma once

#include <string>

#include <json.hpp>

#include "qutil/simcore/circuit.hpp"

namespace qutil::sim {

// Interchange format:
//   {"num_qubits": 2, "num_params": 1,
//    "gates": [{"kind": "H", "targets": [0]},
//              {"kind": "RY", "targets": [1], "param_slot": 0},
//              {"kind": "RZ", "targets": [1], "angle": 0.5},
//              {"kind": "CNOT", "targets": [0, 1]}]}
// "num_params" defaults to 0. Mid-circuit measurement kinds are rejected
// with ClassicalControlError.

nlohmann::json to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& j);
Circuit load_circuit(const std::string& path);

}  // namespace qutil::sim
