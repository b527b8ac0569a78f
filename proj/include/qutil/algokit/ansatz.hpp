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

#include "qutil/simcore/circuit.hpp"

namespace qutil::algo {

using sim::Circuit;

/// Hardware-efficient ansatz. Layer l applies RY(slot 2(lN+q)) and
/// RZ(slot 2(lN+q)+1) on every qubit q, then CZ(q, q+1) along the chain.
/// num_params = 2 N layers. Only nearest-neighbour CZs, so it routes onto a
/// linear topology without SWAPs.
Circuit build_hea_ansatz(std::size_t num_qubits, std::size_t layers);

/// True if every parameter slot is used by exactly one rotation gate.
bool slots_used_once(const Circuit& circuit);

}  // namespace qutil::algo
