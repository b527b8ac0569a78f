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

#include "qutil/simcore/state_vector.hpp"

#include <bit>
#include <cmath>

#include "qutil/error.hpp"

namespace qutil::sim {

namespace kp = kernels::parallel;

kernels::Mat2 gate_matrix(GateKind kind, double angle) {
    using C = Amplitude;
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    const double r = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case GateKind::RX: return {C(c, 0), C(0, -s), C(0, -s), C(c, 0)};
        case GateKind::RY: return {C(c, 0), C(-s, 0), C(s, 0), C(c, 0)};
        case GateKind::RZ: return {C(c, -s), C(0, 0), C(0, 0), C(c, s)};
        case GateKind::X: return {C(0), C(1), C(1), C(0)};
        case GateKind::Y: return {C(0), C(0, -1), C(0, 1), C(0)};
        case GateKind::Z: return {C(1), C(0), C(0), C(-1)};
        case GateKind::H: return {C(r), C(r), C(r), C(-r)};
        default: break;
    }
    throw UnsupportedGate("gate_matrix: " + std::string(to_string(kind)) + " is not a single-qubit gate");
}

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) throw InvalidInput("a state needs at least one qubit");
    if (num_qubits > kMaxQubits) {
        throw SizeLimitError(std::to_string(num_qubits) + " qubits exceeds the simulator limit of " +
                             std::to_string(kMaxQubits));
    }
    amps_.assign(std::size_t{1} << num_qubits, Amplitude(0.0));
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Amplitude> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw InvalidInput("amplitude vector length must be a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(dim));
    if (n > kMaxQubits) throw SizeLimitError("state exceeds the simulator limit");
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis_state(std::size_t num_qubits, std::uint64_t index) {
    StateVector s(num_qubits);
    if (index >= s.dimension()) throw IndexError("basis index out of range");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
    return p;
}

double StateVector::norm_squared() const { return kp::norm_squared(amps_); }

void StateVector::apply(const Gate& gate, std::optional<double> bound_angle) {
    validate(gate, num_qubits_, gate.param_slot ? *gate.param_slot + 1 : 0);
    if (gate.param_slot.has_value() != bound_angle.has_value()) {
        throw InvalidInput(gate.param_slot ? "parametric gate applied without a bound angle"
                                           : "bound angle supplied for a gate without a parameter slot");
    }
    const auto& t = gate.targets;
    switch (gate.kind) {
        case GateKind::CZ: kp::apply_cz(amps_, t[0], t[1]); return;
        case GateKind::CNOT: kp::apply_cnot(amps_, t[0], t[1]); return;
        case GateKind::SWAP: kp::apply_swap(amps_, t[0], t[1]); return;
        case GateKind::CCNOT: kp::apply_ccnot(amps_, t[0], t[1], t[2]); return;
        default: break;
    }
    const double angle = bound_angle ? *bound_angle : gate.angle.value_or(0.0);
    kp::apply_1q(amps_, t[0], gate_matrix(gate.kind, angle));
}

void StateVector::apply_pauli(const kernels::PauliMask& pauli) { kp::apply_pauli(amps_, pauli); }

std::string bitstring(std::uint64_t index, std::size_t num_qubits) {
    std::string s(num_qubits, '0');
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if (index >> q & 1U) s[num_qubits - 1 - q] = '1';
    }
    return s;
}

std::uint64_t parse_bitstring(const std::string& bits) {
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw InvalidInput("bitstring may contain only 0 and 1: " + bits);
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return index;
}

bool equal_up_to_phase(std::span<const Amplitude> a, std::span<const Amplitude> b, double tol) {
    if (a.size() != b.size()) return false;
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (std::abs(a[i]) > std::abs(a[pivot])) pivot = i;
    }
    if (std::abs(a[pivot]) < tol) {
        for (const auto& v : b) {
            if (std::abs(v) > tol) return false;
        }
        return true;
    }
    if (std::abs(b[pivot]) < tol) return false;
    const Amplitude phase = b[pivot] / a[pivot];
    const Amplitude unit = phase / std::abs(phase);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] * unit - b[i]) > tol) return false;
    }
    return true;
}

}  // namespace qutil::sim
