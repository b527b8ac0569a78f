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

#include "qutil/simcore/circuit.hpp"

namespace qutil::sim {

struct RandomCircuitOptions {
    bool allow_ccnot = true;
    bool allow_parametric = false;  // rotations use fresh parameter slots
    double two_qubit_fraction = 0.35;
};

/// Seeded random circuit over the full gate alphabet with exactly
/// `num_gates` gates. Deterministic in (num_qubits, num_gates, seed, options).
Circuit random_circuit(std::size_t num_qubits, std::size_t num_gates, std::uint64_t seed,
                       const RandomCircuitOptions& options = {});

}  // namespace qutil::sim
