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
#include <string>
#include <vector>

#include "qutil/qcompile/native_gates.hpp"
#include "qutil/qcompile/topology.hpp"
#include "qutil/simcore/circuit.hpp"

namespace qutil::compile {

using sim::Circuit;

struct SwapEvent {
    std::size_t gate_index;  // position of the SWAP in the routed circuit
    std::size_t physical_a;
    std::size_t physical_b;
    friend bool operator==(const SwapEvent&, const SwapEvent&) = default;
};

/// Logical-to-physical layout history. initial[l] is the physical qubit that
/// holds logical qubit l at the start; final[l] at the end. Physical qubits
/// not in the image start in |0> and must end in |0>.
struct QubitMap {
    std::vector<std::size_t> initial;
    std::vector<std::size_t> final;
    std::vector<SwapEvent> swaps;

    static QubitMap identity(std::size_t num_logical);
    friend bool operator==(const QubitMap&, const QubitMap&) = default;
};

struct CompileStats {
    std::size_t native_depth = 0;
    std::size_t two_qubit_count = 0;
    std::size_t swap_inserted = 0;
    std::size_t gate_count = 0;
};

struct CompiledCircuit {
    Circuit circuit;
    QubitMap qubit_map;
    CompileStats stats;
};

/// Lowers every gate to `natives`. Native gates pass through untouched, so a
/// native circuit is a fixed point. Parameter slots are preserved.
Circuit decompose_to_native(const Circuit& circuit, const NativeGateSet& natives);

/// Greedy shortest-path SWAP insertion. For each 2-qubit gate on
/// non-adjacent qubits, the lower-indexed logical qubit is swapped along a
/// shortest path until adjacent. The layout is not restored. Gates on three
/// or more qubits must be lowered first.
CompiledCircuit route_to_topology(const Circuit& circuit, const Topology& topo);

/// decompose -> route -> decompose (lowering the inserted SWAPs).
CompiledCircuit compile(const Circuit& circuit, const NativeGateSet& natives, const Topology& topo);

/// Number of 2-qubit gates acting on non-adjacent physical qubits.
std::size_t count_nonadjacent(const Circuit& circuit, const Topology& topo);

CompileStats stats_of(const Circuit& circuit, std::size_t swap_inserted = 0);

/// Brute-force check that `b` (on physical qubits, laid out by `map`)
/// implements `a` up to one global phase, over all 2^N basis inputs, at
/// tolerance 1e-10. Both circuits are run with `params`. N <= 10.
bool verify_equivalence(const Circuit& a, const Circuit& b, const QubitMap& map,
                        std::span<const double> params = {});
bool verify_equivalence(const Circuit& a, const Circuit& b, std::span<const double> params = {});

/// Reorders a physical measurement bitstring into logical order using the
/// final layout.
std::string logical_bitstring(const std::string& physical_bits, const QubitMap& map);

}  // namespace qutil::compile
