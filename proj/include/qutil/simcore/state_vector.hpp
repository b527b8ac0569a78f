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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qutil/simcore/gate.hpp"
#include "qutil/simcore/kernels.hpp"

namespace qutil::sim {

/// Largest register the dense simulator accepts.
inline constexpr std::size_t kMaxQubits = 24;

using Amplitude = std::complex<double>;

/// 2x2 unitary of a single-qubit gate kind (`angle` ignored for fixed kinds).
kernels::Mat2 gate_matrix(GateKind kind, double angle = 0.0);

/// Dense state of `num_qubits` qubits. Basis index bit q is qubit q.
class StateVector {
  public:
    /// |0...0>.
    explicit StateVector(std::size_t num_qubits);

    /// Takes ownership of `amplitudes`; length must be a power of two.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);
    static StateVector basis_state(std::size_t num_qubits, std::uint64_t index);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    std::span<Amplitude> amplitudes() { return amps_; }
    const Amplitude& operator[](std::uint64_t i) const { return amps_[i]; }

    double probability(std::uint64_t index) const { return std::norm(amps_[index]); }
    std::vector<double> probabilities() const;
    double norm_squared() const;

    /// Applies `gate`. `bound_angle` must be given iff the gate has a
    /// parameter slot.
    void apply(const Gate& gate, std::optional<double> bound_angle = std::nullopt);
    void apply_pauli(const kernels::PauliMask& pauli);

  private:
    StateVector(std::size_t num_qubits, std::vector<Amplitude> amps);

    std::size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

/// Renders a basis index most-significant qubit first ("q_{n-1} ... q_0").
std::string bitstring(std::uint64_t index, std::size_t num_qubits);
std::uint64_t parse_bitstring(const std::string& bits);

/// True if a and b agree up to one global phase, amplitude-wise within `tol`.
bool equal_up_to_phase(std::span<const Amplitude> a, std::span<const Amplitude> b, double tol);

}  // namespace qutil::sim
