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

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qutil/algokit/dataset.hpp"
#include "qutil/profiler/events.hpp"
#include "qutil/simcore/circuit.hpp"

namespace qutil::algo {

enum class EncoderKind {
    Angle,     // RY(x_k) on qubit k
    Layered,   // per layer: H, RZ(x_k), CZ chain, RY(x_k); depth O(N) per layer
    Identity,  // no gates: every point maps to |0...0>
};

std::string_view to_string(EncoderKind kind);
EncoderKind parse_encoder_kind(std::string_view name);

/// Feature map x -> U(x) on one qubit per feature.
struct FeatureMap {
    EncoderKind kind = EncoderKind::Angle;
    std::size_t layers = 1;
    std::optional<std::size_t> num_features{};  // when set, inputs must match

    sim::Circuit circuit(std::span<const double> x) const;
};

/// Exact probabilities, or `shots` samples per kernel circuit.
struct KernelMode {
    bool exact = true;
    std::uint64_t shots = 0;
};

struct KernelResult {
    Eigen::MatrixXd matrix;
    std::uint64_t circuits = 0;  // distinct kernel circuits executed
    std::size_t depth = 0;       // depth of the kernel circuits
};

/// K_ij = p(0...0) after U(x_j) followed by U(x_i)^dagger, for i < j;
/// K_ji = K_ij, K_ii = 1. Pair k (row-major over i < j) samples with seed
/// `seed + k`; pairs run concurrently.
KernelResult quantum_kernel_matrix(const LabeledDataset& data, const FeatureMap& map, const KernelMode& mode,
                                   std::uint64_t seed, prof::EventLog* log = nullptr,
                                   const std::string& run_id = "qk");

/// Exact overlap |<0|U(a)^dag U(b)|0>|^2 for one pair.
double kernel_entry(const FeatureMap& map, std::span<const double> a, std::span<const double> b);

/// prod_k cos^2((a_k - b_k) / 2): the closed form of the angle encoder, used
/// as the classical baseline kernel.
Eigen::MatrixXd classical_angle_kernel(const LabeledDataset& data);

/// Ridge (least-squares) kernel classifier: (K + lambda I) alpha = y.
struct KernelClassifier {
    Eigen::VectorXd alpha;
    double lambda = 0.0;
    double training_accuracy = 0.0;

    /// sign(sum_i alpha_i k_i), with sign(0) = +1.
    int predict(const Eigen::VectorXd& kernel_row) const;
};

KernelClassifier train_kernel_classifier(const Eigen::MatrixXd& kernel, const std::vector<int>& labels,
                                         double lambda);

}  // namespace qutil::algo
