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
#include <span>
#include <string>
#include <vector>

#include "qutil/algokit/dataset.hpp"
#include "qutil/algokit/optimizer.hpp"
#include "qutil/simcore/circuit.hpp"
#include "qutil/simcore/simulator.hpp"

namespace qutil::algo {

struct ClassifierResult {
    TrainingTrace trace;
    double accuracy = 0.0;            // training accuracy at the final parameters
    double untrained_accuracy = 0.0;  // at the initial parameters
    std::vector<int> predictions;
    std::size_t depth = 0;            // depth of one classification circuit
};

/// Quantum variational classifier: angle encoding RY(x_k) on qubit k, then
/// `layers` HEA layers; the model output is <Z> on qubit `readout`.
struct QvcConfig {
    std::size_t layers = 1;
    double margin = 1.0;  // loss = mean max(0, margin - y f(x))
    std::size_t readout = 0;
    OptimizerConfig optimizer{.max_iterations = 20};
    std::optional<sim::NoiseModel> noise;  // when set, f is estimated from noisy shots
    std::uint64_t shots = 2000;            // per circuit in noisy mode
};

sim::Circuit qvc_circuit(std::span<const double> x, std::size_t layers);

/// One circuit per training point per objective evaluation. In noisy mode
/// point i of evaluation e samples with seed base + e |T| + i.
ClassifierResult run_qvc(const LabeledDataset& data, const QvcConfig& config, std::uint64_t seed,
                         prof::EventLog* log = nullptr, const std::string& run_id = "qvc");

/// Single-qubit data re-uploading classifier. Features are zero-padded to a
/// multiple of three; each layer applies, per 3-block, the encoding triple
/// RY(x0) RZ(x1) RY(x2) followed by a trainable RZ RY RZ. The cost is
/// 1 - fidelity to |0> (label +1) or |1> (label -1).
struct ReuploadConfig {
    std::size_t layers = 1;
    OptimizerConfig optimizer{.max_iterations = 30};
};

sim::Circuit reuploading_circuit(std::span<const double> x, std::size_t layers);

ClassifierResult run_reuploading(const LabeledDataset& data, const ReuploadConfig& config, std::uint64_t seed,
                                 prof::EventLog* log = nullptr, const std::string& run_id = "reuploading");

}  // namespace qutil::algo
