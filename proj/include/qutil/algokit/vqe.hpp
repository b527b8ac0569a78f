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
#include <span>
#include <string>
#include <vector>

#include "qutil/algokit/ansatz.hpp"
#include "qutil/algokit/hamiltonian.hpp"
#include "qutil/algokit/optimizer.hpp"
#include "qutil/simcore/circuit.hpp"

namespace qutil::algo {

/// Exact expectation values, or a fixed number of shots per measurement
/// circuit.
struct ShotConfig {
    bool exact = true;
    std::uint64_t shots = 0;

    static ShotConfig exact_mode() { return {}; }
    static ShotConfig with_shots(std::uint64_t shots);
    /// S = ceil(1 / epsilon^2) shots per circuit.
    static ShotConfig for_precision(double epsilon);
};

struct VqeProblem {
    PauliSum hamiltonian;
    Circuit ansatz;
    ShotConfig shot_config;
};

struct VqeResult {
    TrainingTrace trace;
    double final_energy = 0.0;        // objective at the final parameters (estimated in shot mode)
    double final_exact_energy = 0.0;  // exact expectation at the final parameters
    double standard_error = 0.0;      // shot-noise standard error of final_energy (0 in exact mode)
    std::size_t circuits_per_evaluation = 0;
    std::size_t compiled_depth = 0;   // max native depth of the measurement circuits on a line
};

/// One circuit per qubit-wise-commuting group: the ansatz followed by the
/// basis change that maps the group's letters to Z (H for X; RZ(-pi/2), H
/// for Y).
std::vector<Circuit> measurement_circuits(const PauliSum& h, const Circuit& ansatz);

/// Energy estimate from `shots` samples per group circuit; group g uses seed
/// `seed + g`. Returns {estimate, standard error}.
std::pair<double, double> estimate_energy(const PauliSum& h, const Circuit& ansatz, std::span<const double> params,
                                          std::uint64_t shots, std::uint64_t seed);

/// Initial parameters come from initial_parameters(q, seed). Deterministic in
/// (problem, optimizer, seed).
VqeResult run_vqe(const VqeProblem& problem, const OptimizerConfig& optimizer, std::uint64_t seed,
                  prof::EventLog* log = nullptr, const std::string& run_id = "vqe");

}  // namespace qutil::algo
