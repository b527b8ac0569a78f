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

#include "qutil/algokit/ansatz.hpp"

#include <vector>

#include "qutil/error.hpp"

namespace qutil::algo {

using sim::Gate;
using sim::GateKind;

Circuit build_hea_ansatz(std::size_t num_qubits, std::size_t layers) {
    if (num_qubits < 1) throw InvalidInput("HEA needs at least one qubit");
    if (layers < 1) throw InvalidInput("HEA needs at least one layer");
    Circuit c(num_qubits, 2 * num_qubits * layers);
    for (std::size_t l = 0; l < layers; ++l) {
        for (std::size_t q = 0; q < num_qubits; ++q) {
            const std::size_t slot = 2 * (l * num_qubits + q);
            c.add(Gate::parametric(GateKind::RY, q, slot));
            c.add(Gate::parametric(GateKind::RZ, q, slot + 1));
        }
        for (std::size_t q = 0; q + 1 < num_qubits; ++q) c.cz(q, q + 1);
    }
    return c;
}

bool slots_used_once(const Circuit& circuit) {
    std::vector<int> uses(circuit.num_params(), 0);
    for (const auto& g : circuit.gates()) {
        if (g.param_slot) ++uses[*g.param_slot];
    }
    for (int u : uses) {
        if (u != 1) return false;
    }
    return true;
}

}  // namespace qutil::algo
