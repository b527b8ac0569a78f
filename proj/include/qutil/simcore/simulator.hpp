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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qutil/simcore/circuit.hpp"
#include "qutil/simcore/pauli_sum.hpp"
#include "qutil/simcore/rng.hpp"
#include "qutil/simcore/state_vector.hpp"

namespace qutil::sim {

/// Bitstring (most-significant qubit first) -> number of shots.
using Counts = std::map<std::string, std::uint64_t>;

/// Per-gate depolarizing noise for trajectory simulation. After a 1-qubit
/// gate, with probability p1 one of {X, Y, Z} is applied to its target;
/// after a multi-qubit gate, with probability p2 one of the 4^k - 1
/// non-identity Paulis on its k targets (15 for 2-qubit gates).
struct NoiseModel {
    double p1 = 0.0;
    double p2 = 0.0;

    bool is_ideal() const { return p1 == 0.0 && p2 == 0.0; }
    void validate() const;
};

/// Optional tally of inserted error Paulis, keyed by label over the gate's
/// targets (e.g. "X", "ZY"; first letter = first target).
struct NoiseTally {
    std::map<std::string, std::uint64_t> inserted;
    std::uint64_t error_free_shots = 0;
};

StateVector apply_gate(StateVector state, const Gate& gate, std::optional<double> bound_angle = std::nullopt);

/// Runs `circuit` from |0...0> (or `initial`) with parameter vector `params`.
StateVector run_statevector(const Circuit& circuit, std::span<const double> params = {});
StateVector run_statevector(const Circuit& circuit, std::span<const double> params, StateVector initial);

double expectation(const StateVector& state, const PauliSum& observable);
double expectation(const StateVector& state, const PauliTerm& term);

/// Cumulative distribution used for sampling; last entry is the total mass.
std::vector<double> cumulative_probabilities(const StateVector& state);

/// Draws one basis index from a cumulative distribution.
std::uint64_t draw_index(std::span<const double> cdf, Rng& rng);

/// Samples `shots` measurements in the computational basis. Deterministic in
/// (state, shots, seed): one Rng(seed) stream, one uniform per shot.
Counts sample_counts(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

/// Per-shot trajectory simulation under `noise`. With an ideal noise model
/// this is exactly sample_counts(run_statevector(circuit, params), shots, seed).
/// Shot s uses the sub-stream substream_seed(seed, s).
Counts run_noisy(const Circuit& circuit, std::span<const double> params, const NoiseModel& noise,
                 std::uint64_t shots, std::uint64_t seed, NoiseTally* tally = nullptr);

/// Fraction of `counts` equal to `bits` (0 if absent).
double frequency(const Counts& counts, const std::string& bits);
std::uint64_t total_shots(const Counts& counts);

}  // namespace qutil::sim
