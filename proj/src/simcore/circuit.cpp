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

#include "qutil/simcore/circuit.hpp"

#include <algorithm>

#include "qutil/error.hpp"

namespace qutil::sim {

Circuit::Circuit(std::size_t num_qubits, std::size_t num_params)
    : num_qubits_(num_qubits), num_params_(num_params) {}

Circuit& Circuit::add(Gate gate) {
    validate(gate, num_qubits_, num_params_);
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.num_qubits_ > num_qubits_) {
        throw InvalidInput("cannot append a " + std::to_string(other.num_qubits_) +
                           "-qubit circuit to a " + std::to_string(num_qubits_) + "-qubit circuit");
    }
    reserve_params(other.num_params_);
    for (const Gate& g : other.gates_) add(g);
    return *this;
}

void Circuit::reserve_params(std::size_t num_params) {
    num_params_ = std::max(num_params_, num_params);
}

std::size_t Circuit::depth() const {
    std::vector<std::size_t> level(num_qubits_, 0);
    std::size_t depth = 0;
    for (const Gate& g : gates_) {
        std::size_t l = 0;
        for (std::size_t q : g.targets) l = std::max(l, level[q]);
        ++l;
        for (std::size_t q : g.targets) level[q] = l;
        depth = std::max(depth, l);
    }
    return depth;
}

std::size_t Circuit::two_qubit_count() const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return g.targets.size() == 2; }));
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind == kind; }));
}

Circuit bind(const Circuit& circuit, std::span<const double> params) {
    if (params.size() != circuit.num_params()) {
        throw InvalidInput("parameter vector has length " + std::to_string(params.size()) +
                           ", circuit expects " + std::to_string(circuit.num_params()));
    }
    Circuit out(circuit.num_qubits());
    for (Gate g : circuit.gates()) {
        if (g.param_slot) {
            g.angle = params[*g.param_slot];
            g.param_slot.reset();
        }
        out.add(std::move(g));
    }
    return out;
}

Circuit adjoint(const Circuit& circuit) {
    Circuit out(circuit.num_qubits());
    const auto& gates = circuit.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        Gate g = *it;
        if (g.param_slot) throw InvalidInput("adjoint() needs a bound circuit; call bind() first");
        if (g.angle) g.angle = -*g.angle;
        out.add(std::move(g));
    }
    return out;
}

}  // namespace qutil::sim
