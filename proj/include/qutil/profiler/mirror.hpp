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

#include <cstdint>
#include <functional>
#include <json.hpp>
#include <span>
#include <string>
#include <vector>

#include "qutil/simcore/circuit.hpp"
#include "qutil/simcore/simulator.hpp"

namespace qutil::prof {

/// Size -> bound circuit (no parameter slots, no CCNOT).
using CircuitFamily = std::function<sim::Circuit(std::size_t)>;

/// C, then a Pauli layer P, then the quasi-inverse of C with respect to P.
/// Ideal execution from |0..0> ends in the basis state `expected`.
struct MirrorCircuit {
    sim::Circuit circuit;
    std::string pauli_layer;  // one letter per qubit, highest qubit first
    std::string expected;     // bitstring, highest qubit first
};

/// Builds the mirror of `c` for the given Pauli layer (letters I, X, Y, Z,
/// highest qubit first). The quasi-inverse is C^dagger with the layer pushed
/// through it: Clifford gates (X, Y, Z, H, CZ, CNOT, SWAP) update the tracked
/// Pauli frame, rotations keep their axis and flip their angle when the frame
/// anticommutes with it. CCNOT raises UnsupportedGate.
MirrorCircuit build_mirror_circuit(const sim::Circuit& c, const std::string& pauli_layer);

/// Pauli layer for `num_qubits` drawn uniformly from {I,X,Y,Z}^N.
std::string random_pauli_layer(std::size_t num_qubits, std::uint64_t seed);

struct MirrorResult {
    std::size_t size = 0;
    std::size_t depth = 0;         // depth of C
    std::size_t mirror_depth = 0;  // depth of the full mirror circuit
    std::size_t gate_count = 0;    // gates in the full mirror circuit
    std::string pauli_layer;
    std::string expected;
    std::uint64_t shots = 0;
    double success_probability = 0.0;
    double standard_error = 0.0;  // binomial, sqrt(s(1-s)/shots)
    sim::NoiseModel noise;
};

/// For each size: mirror the family member with a Pauli layer drawn from
/// substream_seed(seed, size), run `shots` noisy trajectories with seed
/// substream_seed(seed, size + 2^32), and report the fraction that lands
/// on the expected bitstring. Sizes are limited to 1..12 qubits.
std::vector<MirrorResult> mirror_benchmark(const CircuitFamily& family, std::span<const std::size_t> sizes,
                                           const sim::NoiseModel& noise, std::uint64_t shots, std::uint64_t seed);

/// Hardware-efficient ansatz with `layers` layers and parameters drawn
/// uniformly from [-pi, pi) with Rng(substream_seed(seed, N)).
CircuitFamily hea_family(std::size_t layers, std::uint64_t seed);

nlohmann::json to_json(const MirrorResult& r);

}  // namespace qutil::prof
