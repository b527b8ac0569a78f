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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qutil::sim {

enum class GateKind { RX, RY, RZ, X, Y, Z, H, CZ, CNOT, SWAP, CCNOT };

inline constexpr GateKind kAllGateKinds[] = {
    GateKind::RX, GateKind::RY, GateKind::RZ,   GateKind::X,    GateKind::Y,    GateKind::Z,
    GateKind::H,  GateKind::CZ, GateKind::CNOT, GateKind::SWAP, GateKind::CCNOT,
};

std::string_view to_string(GateKind kind);

/// Parses the canonical upper-case name ("RX", "CNOT", ...). Also accepts
/// "CX" and "TOFFOLI". Names of classical-control operations ("MEASURE",
/// "RESET", "IF", ...) raise ClassicalControlError; anything else raises
/// UnsupportedGate.
GateKind parse_gate_kind(std::string_view name);

std::size_t arity(GateKind kind);
bool is_rotation(GateKind kind);

/// Single qubit gate kinds whose matrix is a Pauli (X, Y, Z).
bool is_pauli(GateKind kind);

/// Targets are ordered: for CNOT {control, target}; for CCNOT
/// {control0, control1, target}. CZ and SWAP are symmetric.
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<std::size_t> targets;
    std::optional<double> angle;
    std::optional<std::size_t> param_slot;

    static Gate fixed(GateKind kind, std::vector<std::size_t> targets);
    static Gate rotation(GateKind kind, std::size_t qubit, double angle);
    static Gate parametric(GateKind kind, std::size_t qubit, std::size_t slot);

    bool is_parametric() const { return param_slot.has_value(); }

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Throws IndexError / InvalidInput if the gate is malformed for a register of
/// `num_qubits` qubits and `num_params` parameter slots.
void validate(const Gate& gate, std::size_t num_qubits, std::size_t num_params);

}  // namespace qutil::sim
