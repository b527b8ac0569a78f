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

#include "qutil/algokit/kernel.hpp"

#include <chrono>
#include <cmath>

#include "qutil/error.hpp"
#include "qutil/simcore/simulator.hpp"

namespace qutil::algo {

using sim::Circuit;

std::string_view to_string(EncoderKind kind) {
    switch (kind) {
        case EncoderKind::Angle: return "angle";
        case EncoderKind::Layered: return "layered";
        case EncoderKind::Identity: return "identity";
    }
    return "?";
}

EncoderKind parse_encoder_kind(std::string_view name) {
    if (name == "angle") return EncoderKind::Angle;
    if (name == "layered") return EncoderKind::Layered;
    if (name == "identity") return EncoderKind::Identity;
    throw InvalidInput("unknown encoder '" + std::string(name) + "'");
}

Circuit FeatureMap::circuit(std::span<const double> x) const {
    if (x.empty()) throw InvalidInput("feature vector is empty");
    if (num_features && *num_features != x.size()) {
        throw InvalidInput("encoder expects " + std::to_string(*num_features) + " features, got " +
                           std::to_string(x.size()));
    }
    const std::size_t n = x.size();
    Circuit c(n);
    switch (kind) {
        case EncoderKind::Angle:
            for (std::size_t k = 0; k < n; ++k) c.ry(k, x[k]);
            break;
        case EncoderKind::Layered:
            if (layers < 1) throw InvalidInput("layered encoder needs at least one layer");
            for (std::size_t l = 0; l < layers; ++l) {
                for (std::size_t k = 0; k < n; ++k) c.h(k).rz(k, x[k]);
                for (std::size_t k = 0; k + 1 < n; ++k) c.cz(k, k + 1);
                for (std::size_t k = 0; k < n; ++k) c.ry(k, x[k]);
            }
            break;
        case EncoderKind::Identity: break;
    }
    return c;
}

namespace {

Circuit pair_circuit(const FeatureMap& map, std::span<const double> a, std::span<const double> b) {
    Circuit c = map.circuit(b);
    c.append(sim::adjoint(map.circuit(a)));
    return c;
}

}  // namespace

double kernel_entry(const FeatureMap& map, std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw InvalidInput("feature dimension mismatch");
    return sim::run_statevector(pair_circuit(map, a, b)).probability(0);
}

KernelResult quantum_kernel_matrix(const LabeledDataset& data, const FeatureMap& map, const KernelMode& mode,
                                   std::uint64_t seed, prof::EventLog* log, const std::string& run_id) {
    data.validate(false);
    if (!mode.exact && mode.shots == 0) throw InvalidInput("shot-mode kernel needs shots >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    prof::RunRecorder recorder(log, run_id, data.size());
    const std::size_t m = data.size();
    KernelResult result;
    result.matrix = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    }
    // Validates dimensions up front so worker threads never throw.
    result.depth = pair_circuit(map, data.features[0], data.features[0]).depth();
    std::vector<double> values(pairs.size());
    const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) {
        const auto [i, j] = pairs[static_cast<std::size_t>(k)];
        const auto state = sim::run_statevector(pair_circuit(map, data.features[i], data.features[j]));
        if (mode.exact) {
            values[static_cast<std::size_t>(k)] = state.probability(0);
        } else {
            const auto counts = sim::sample_counts(state, mode.shots, seed + static_cast<std::uint64_t>(k));
            values[static_cast<std::size_t>(k)] = sim::frequency(counts, std::string(state.num_qubits(), '0'));
        }
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [i, j] = pairs[k];
        result.matrix(Eigen::Index(i), Eigen::Index(j)) = result.matrix(Eigen::Index(j), Eigen::Index(i)) = values[k];
    }
    result.circuits = pairs.size();
    recorder.circuits(result.circuits, result.depth);
    recorder.shots(mode.exact ? 0 : result.circuits * mode.shots);
    recorder.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return result;
}

Eigen::MatrixXd classical_angle_kernel(const LabeledDataset& data) {
    data.validate(false);
    const auto m = static_cast<Eigen::Index>(data.size());
    Eigen::MatrixXd k(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            double v = 1.0;
            const auto& a = data.features[std::size_t(i)];
            const auto& b = data.features[std::size_t(j)];
            for (std::size_t f = 0; f < a.size(); ++f) {
                const double c = std::cos((a[f] - b[f]) / 2);
                v *= c * c;
            }
            k(i, j) = v;
        }
    }
    return k;
}

int KernelClassifier::predict(const Eigen::VectorXd& kernel_row) const {
    if (kernel_row.size() != alpha.size()) throw InvalidInput("kernel row length differs from training set size");
    return alpha.dot(kernel_row) >= 0 ? 1 : -1;
}

KernelClassifier train_kernel_classifier(const Eigen::MatrixXd& kernel, const std::vector<int>& labels,
                                         double lambda) {
    if (kernel.rows() != kernel.cols()) throw InvalidInput("kernel matrix must be square");
    if (static_cast<std::size_t>(kernel.rows()) != labels.size()) throw InvalidInput("label count differs from kernel size");
    if (!(lambda > 0)) throw InvalidInput("ridge parameter lambda must be > 0");
    Eigen::VectorXd y(kernel.rows());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != 1 && labels[i] != -1) throw InvalidInput("kernel classifier labels must be +-1");
        y(Eigen::Index(i)) = labels[i];
    }
    const Eigen::MatrixXd system = kernel + lambda * Eigen::MatrixXd::Identity(kernel.rows(), kernel.cols());
    KernelClassifier clf;
    clf.lambda = lambda;
    clf.alpha = system.ldlt().solve(y);
    if (!clf.alpha.allFinite()) throw NumericalError("kernel ridge system could not be solved");
    std::size_t correct = 0;
    for (Eigen::Index i = 0; i < kernel.rows(); ++i) {
        if (clf.predict(kernel.col(i)) == labels[std::size_t(i)]) ++correct;
    }
    clf.training_accuracy = labels.empty() ? 1.0 : double(correct) / double(labels.size());
    return clf;
}

}  // namespace qutil::algo
