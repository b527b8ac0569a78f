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

#include "qutil/simcore/gate.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

#include "qutil/error.hpp"

namespace qutil::sim {

namespace {

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

constexpr std::array<std::string_view, 8> kClassicalControlNames = {
    "MEASURE", "M", "MEASURE_Z", "RESET", "IF", "C_IF", "CONDITIONAL", "BARRIER_MEASURE",
};

}  // namespace

std::string_view to_string(GateKind kind) {
    switch (kind) {
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::CZ: return "CZ";
        case GateKind::CNOT: return "CNOT";
        case GateKind::SWAP: return "SWAP";
        case GateKind::CCNOT: return "CCNOT";
    }
    return "?";
}

GateKind parse_gate_kind(std::string_view name) {
    const std::string u = upper(name);
    for (GateKind k : kAllGateKinds) {
        if (u == to_string(k)) return k;
    }
    if (u == "CX") return GateKind::CNOT;
    if (u == "TOFFOLI" || u == "CCX") return GateKind::CCNOT;
    for (auto cc : kClassicalControlNames) {
        if (u == cc) {
            throw ClassicalControlError("classical control operation '" + std::string(name) +
                                        "' is not executable (mid-circuit measurement / "
                                        "conditional gates are descriptor-only)");
        }
    }
    throw UnsupportedGate("unknown gate kind '" + std::string(name) + "'");
}

std::size_t arity(GateKind kind) {
    switch (kind) {
        case GateKind::CZ:
        case GateKind::CNOT:
        case GateKind::SWAP: return 2;
        case GateKind::CCNOT: return 3;
        default: return 1;
    }
}

bool is_rotation(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

bool is_pauli(GateKind kind) {
    return kind == GateKind::X || kind == GateKind::Y || kind == GateKind::Z;
}

Gate Gate::fixed(GateKind kind, std::vector<std::size_t> targets) {
    return Gate{kind, std::move(targets), std::nullopt, std::nullopt};
}

Gate Gate::rotation(GateKind kind, std::size_t qubit, double angle) {
    return Gate{kind, {qubit}, angle, std::nullopt};
}

Gate Gate::parametric(GateKind kind, std::size_t qubit, std::size_t slot) {
    return Gate{kind, {qubit}, std::nullopt, slot};
}

void validate(const Gate& gate, std::size_t num_qubits, std::size_t num_params) {
    const std::string name(to_string(gate.kind));
    if (gate.targets.size() != arity(gate.kind)) {
        throw InvalidInput(name + " expects " + std::to_string(arity(gate.kind)) + " target(s), got " +
                           std::to_string(gate.targets.size()));
    }
    for (std::size_t i = 0; i < gate.targets.size(); ++i) {
        if (gate.targets[i] >= num_qubits) {
            throw IndexError(name + " target " + std::to_string(gate.targets[i]) +
                             " out of range for " + std::to_string(num_qubits) + " qubit(s)");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (gate.targets[i] == gate.targets[j]) {
                throw InvalidInput(name + " targets must be distinct");
            }
        }
    }
    if (is_rotation(gate.kind)) {
        if (gate.angle.has_value() == gate.param_slot.has_value()) {
            throw InvalidInput(name + " needs exactly one of angle / param_slot");
        }
        if (gate.angle && !std::isfinite(*gate.angle)) {
            throw InvalidInput(name + " angle must be finite");
        }
        if (gate.param_slot && *gate.param_slot >= num_params) {
            throw IndexError(name + " param_slot " + std::to_string(*gate.param_slot) +
                             " >= num_params " + std::to_string(num_params));
        }
    } else if (gate.angle || gate.param_slot) {
        throw InvalidInput(name + " is a fixed gate and takes no angle");
    }
}

}  // namespace qutil::sim
