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

#include "qutil/algokit/optimizer.hpp"
#include "qutil/simcore/simulator.hpp"

namespace qutil::algo {

/// Largest register for Born-machine training.
inline constexpr std::size_t kMaxQcbmQubits = 8;

/// Distribution over 2^N bitstrings indexed like basis states.
struct TargetDistribution {
    std::size_t num_qubits = 0;
    std::vector<double> probabilities;

    static TargetDistribution point_mass(const std::string& bits);
    static TargetDistribution uniform(std::size_t num_qubits);
    /// Non-negative, length 2^N, sums to 1 within 1e-12.
    void validate() const;
};

/// Half the L1 distance.
double total_variation(std::span<const double> p, std::span<const double> q);
double total_variation(const sim::Counts& counts, const TargetDistribution& target);

struct QcbmConfig {
    std::size_t layers = 2;
    std::uint64_t shots = 0;  // 0: exact probabilities
    std::size_t batches = 4;  // shot batches sampled concurrently
    // TVD gradients are bounded by 1 and usually far smaller, so the SPSA gain
    // is larger than the energy-scale default.
    OptimizerConfig optimizer{.kind = OptimizerKind::Spsa, .max_iterations = 300, .spsa_a = 1.0};
};

struct QcbmResult {
    TrainingTrace trace;
    double final_tvd = 0.0;  // exact TVD at the final parameters
};

/// Samples `shots` from `state` in `batches` concurrent batches; batch b
/// uses seed `seed + b`. Deterministic in (state, shots, batches, seed).
sim::Counts sample_batched(const sim::StateVector& state, std::uint64_t shots, std::size_t batches,
                           std::uint64_t seed);

/// Trains an HEA Born machine against `target` with TVD loss. One circuit
/// per loss evaluation. Warns in the trace when shots < 10 * 2^N.
QcbmResult run_qcbm(const TargetDistribution& target, const QcbmConfig& config, std::uint64_t seed,
                    prof::EventLog* log = nullptr, const std::string& run_id = "qcbm");

/// Expected TVD between the empirical distribution of `shots` samples from
/// the uniform N-qubit state and the uniform distribution. By symmetry this
/// is (K/2) E|B/S - 1/K| with B ~ Binomial(S, 1/K), K = 2^N, and the
/// binomial mean absolute deviation has De Moivre's closed form.
double expected_uniform_tvd(std::size_t num_qubits, std::uint64_t shots);

/// Smallest S with expected_uniform_tvd(N, S) <= tol. The expectation is
/// not monotone in S (lattice effects), so S is found by an upward scan.
/// Grows like (2^N - 1) / (2 pi tol^2).
std::uint64_t shots_to_resolve(std::size_t num_qubits, double tol);

}  // namespace qutil::algo
