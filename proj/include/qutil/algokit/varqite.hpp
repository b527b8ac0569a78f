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
#include <optional>
#include <string>
#include <vector>

#include "qutil/algokit/ansatz.hpp"
#include "qutil/algokit/hamiltonian.hpp"
#include "qutil/algokit/trace.hpp"
#include "qutil/simcore/circuit.hpp"

namespace qutil::algo {

struct VarQiteConfig {
    double dt = 0.1;
    std::size_t steps = 100;
    double regularization = 1e-6;    // lambda in (A + lambda I) theta_dot = C
    std::size_t max_halvings = 3;    // per step, on rejection
    double increase_tolerance = 1e-9;
    std::optional<std::vector<double>> initial_params{};  // default: initial_parameters(q, seed)
};

struct VarQiteResult {
    TrainingTrace trace;               // energy after each accepted step (entry 0: initial)
    std::uint64_t circuit_evaluations = 0;
    std::size_t steps_completed = 0;
    std::size_t rejected_attempts = 0;
    bool stalled = false;
};

/// t (q (q + 1) / 2 + q p): A needs the q(q+1)/2 upper-triangle overlaps, C
/// one circuit per (parameter, Hamiltonian term) pair.
std::uint64_t varqite_circuit_count(std::uint64_t t, std::uint64_t q, std::uint64_t p);

/// McLachlan-style variational imaginary-time evolution with statevector
/// matrix elements. A_ij = Re<d_i psi|d_j psi>, C_i = -Re<d_i psi|H|psi>,
/// d_i psi = psi(theta + pi e_i) / 2 (every slot must drive exactly one
/// rotation). Each step solves (A + lambda I) theta_dot = C and moves
/// theta += dt theta_dot. A step whose energy rises by more than the
/// tolerance, or whose solve fails, is retried with dt halved up to
/// max_halvings times. A persistent energy rise ends the run as "stalled";
/// a persistent solve failure throws NumericalError.
VarQiteResult run_varqite(const PauliSum& h, const Circuit& ansatz, const VarQiteConfig& config, std::uint64_t seed,
                          prof::EventLog* log = nullptr, const std::string& run_id = "varqite");

}  // namespace qutil::algo
