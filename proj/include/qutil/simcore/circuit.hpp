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
#include <span>
#include <vector>

#include "qutil/simcore/gate.hpp"

namespace qutil::sim {

/// Ordered gate list over `num_qubits` qubits with `num_params` free
/// parameter slots. Gates are validated on insertion.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::size_t num_qubits, std::size_t num_params = 0);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t num_params() const { return num_params_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    Circuit& add(Gate gate);
    Circuit& rx(std::size_t q, double a) { return add(Gate::rotation(GateKind::RX, q, a)); }
    Circuit& ry(std::size_t q, double a) { return add(Gate::rotation(GateKind::RY, q, a)); }
    Circuit& rz(std::size_t q, double a) { return add(Gate::rotation(GateKind::RZ, q, a)); }
    Circuit& x(std::size_t q) { return add(Gate::fixed(GateKind::X, {q})); }
    Circuit& y(std::size_t q) { return add(Gate::fixed(GateKind::Y, {q})); }
    Circuit& z(std::size_t q) { return add(Gate::fixed(GateKind::Z, {q})); }
    Circuit& h(std::size_t q) { return add(Gate::fixed(GateKind::H, {q})); }
    Circuit& cz(std::size_t a, std::size_t b) { return add(Gate::fixed(GateKind::CZ, {a, b})); }
    Circuit& cnot(std::size_t c, std::size_t t) { return add(Gate::fixed(GateKind::CNOT, {c, t})); }
    Circuit& swap(std::size_t a, std::size_t b) { return add(Gate::fixed(GateKind::SWAP, {a, b})); }
    Circuit& ccnot(std::size_t c0, std::size_t c1, std::size_t t) {
        return add(Gate::fixed(GateKind::CCNOT, {c0, c1, t}));
    }

    /// Appends all gates of `other`; parameter slots are kept as-is, so the
    /// two circuits share a parameter vector.
    Circuit& append(const Circuit& other);

    /// Grows the parameter slot count (never shrinks).
    void reserve_params(std::size_t num_params);

    /// Scheduling-layer depth: the longest chain of gates that share a qubit.
    std::size_t depth() const;
    std::size_t two_qubit_count() const;
    std::size_t count(GateKind kind) const;

    friend bool operator==(const Circuit&, const Circuit&) = default;

  private:
    std::size_t num_qubits_ = 0;
    std::size_t num_params_ = 0;
    std::vector<Gate> gates_;
};

/// Replaces every parameter slot by its bound angle. The result has
/// num_params() == 0. Throws InvalidInput if params.size() != num_params().
Circuit bind(const Circuit& circuit, std::span<const double> params);

/// The inverse circuit: gates reversed, rotation angles negated. All kinds in
/// the alphabet other than rotations are self-inverse. Requires a bound
/// circuit (no parameter slots).
Circuit adjoint(const Circuit& circuit);

}  // namespace qutil::sim
