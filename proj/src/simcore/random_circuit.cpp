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

#include "qutil/simcore/random_circuit.hpp"

#include <algorithm>
#include <numbers>

#include "qutil/error.hpp"
#include "qutil/simcore/rng.hpp"

namespace qutil::sim {

Circuit random_circuit(std::size_t num_qubits, std::size_t num_gates, std::uint64_t seed,
                       const RandomCircuitOptions& options) {
    if (num_qubits == 0) throw InvalidInput("random_circuit needs at least one qubit");
    Rng rng(seed);
    Circuit c(num_qubits);
    std::size_t slots = 0;
    constexpr GateKind one_q[] = {GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::X,
                                  GateKind::Y,  GateKind::Z,  GateKind::H};
    constexpr GateKind two_q[] = {GateKind::CZ, GateKind::CNOT, GateKind::SWAP};
    auto pick_distinct = [&](std::size_t k) {
        std::vector<std::size_t> qs;
        while (qs.size() < k) {
            const auto q = static_cast<std::size_t>(rng.below(num_qubits));
            if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
        }
        return qs;
    };
    for (std::size_t i = 0; i < num_gates; ++i) {
        const double u = rng.uniform();
        if (num_qubits >= 3 && options.allow_ccnot && u < 0.05) {
            c.add(Gate::fixed(GateKind::CCNOT, pick_distinct(3)));
        } else if (num_qubits >= 2 && u < options.two_qubit_fraction) {
            c.add(Gate::fixed(two_q[rng.below(3)], pick_distinct(2)));
        } else {
            const GateKind k = one_q[rng.below(7)];
            const auto q = static_cast<std::size_t>(rng.below(num_qubits));
            if (is_rotation(k)) {
                const double angle = rng.uniform(-std::numbers::pi, std::numbers::pi);
                if (options.allow_parametric && rng.uniform() < 0.5) {
                    c.reserve_params(slots + 1);
                    c.add(Gate::parametric(k, q, slots++));
                } else {
                    c.add(Gate::rotation(k, q, angle));
                }
            } else {
                c.add(Gate::fixed(k, {q}));
            }
        }
    }
    return c;
}

}  // namespace qutil::sim
