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

#include "qutil/algokit/classifiers.hpp"

#include <chrono>
#include <cmath>

#include "qutil/algokit/ansatz.hpp"
#include "qutil/error.hpp"
#include "qutil/simcore/rng.hpp"

namespace qutil::algo {

using sim::Circuit;
using sim::Gate;
using sim::GateKind;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double z_expectation(const sim::StateVector& s, std::size_t qubit) {
    double e = 0;
    for (std::uint64_t i = 0; i < s.dimension(); ++i) e += ((i >> qubit) & 1U) ? -s.probability(i) : s.probability(i);
    return e;
}

double z_from_counts(const sim::Counts& counts, std::size_t qubit) {
    double e = 0, total = 0;
    for (const auto& [bits, c] : counts) {
        const bool one = bits[bits.size() - 1 - qubit] == '1';
        e += one ? -double(c) : double(c);
        total += double(c);
    }
    return e / total;
}

struct Scored {
    double accuracy;
    std::vector<int> predictions;
};

template <typename Model>
Scored score(const LabeledDataset& data, const Model& model) {
    Scored s{0.0, {}};
    std::size_t correct = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const int p = model(i) >= 0 ? 1 : -1;
        s.predictions.push_back(p);
        if (p == data.labels[i]) ++correct;
    }
    s.accuracy = double(correct) / double(data.size());
    return s;
}

}  // namespace

Circuit qvc_circuit(std::span<const double> x, std::size_t layers) {
    const std::size_t n = x.size();
    const Circuit hea = build_hea_ansatz(n, layers);
    Circuit c(n, hea.num_params());
    for (std::size_t k = 0; k < n; ++k) c.ry(k, x[k]);
    c.append(hea);
    return c;
}

ClassifierResult run_qvc(const LabeledDataset& data, const QvcConfig& cfg, std::uint64_t seed,
                         prof::EventLog* log, const std::string& run_id) {
    data.validate(true);
    if (cfg.readout >= data.dimension()) throw IndexError("readout qubit outside the register");
    if (cfg.noise) cfg.noise->validate();
    const auto t0 = std::chrono::steady_clock::now();
    prof::RunRecorder recorder(log, run_id, data.size());

    std::vector<Circuit> circuits;
    for (const auto& x : data.features) circuits.push_back(qvc_circuit(x, cfg.layers));
    const std::size_t depth = circuits.front().depth();
    const std::size_t m = data.size();

    ClassifierResult result;
    Meter meter(result.trace.resources, &recorder);
    const std::uint64_t shot_base = sim::substream_seed(seed, 2);
    std::uint64_t evaluation = 0;
    auto outputs = [&](std::span<const double> params) {
        std::vector<double> f(m);
        const std::uint64_t base = shot_base + evaluation * m;
        const auto count = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t k = 0; k < count; ++k) {
            const auto i = static_cast<std::size_t>(k);
            if (cfg.noise) {
                const auto counts = sim::run_noisy(circuits[i], params, *cfg.noise, cfg.shots, base + i);
                f[i] = z_from_counts(counts, cfg.readout);
            } else {
                f[i] = z_expectation(sim::run_statevector(circuits[i], params), cfg.readout);
            }
        }
        ++evaluation;
        meter.circuits(m, depth, cfg.noise ? cfg.shots : 0);
        return f;
    };
    const Objective loss = [&](std::span<const double> params) {
        const auto f = outputs(params);
        double l = 0;
        for (std::size_t i = 0; i < m; ++i) l += std::max(0.0, cfg.margin - data.labels[i] * f[i]);
        ++result.trace.resources.objective_evaluations;
        return l / double(m);
    };

    const auto x0 = initial_parameters(circuits.front().num_params(), seed);
    const auto f0 = outputs(x0);
    result.untrained_accuracy = score(data, [&](std::size_t i) { return f0[i]; }).accuracy;
    // With margin >= 1 the hinge never clips (|f| <= 1), so the loss is
    // linear in f and hence sinusoidal in each parameter.
    auto trace = minimize(loss, x0, cfg.optimizer, sim::substream_seed(seed, 1), cfg.margin >= 1.0);
    trace.resources = result.trace.resources;
    result.trace = std::move(trace);
    const auto ff = outputs(result.trace.final_params);
    auto s = score(data, [&](std::size_t i) { return ff[i]; });
    result.accuracy = s.accuracy;
    result.predictions = std::move(s.predictions);
    result.depth = depth;
    recorder.finish(seconds_since(t0));
    return result;
}

Circuit reuploading_circuit(std::span<const double> x, std::size_t layers) {
    if (layers < 1) throw InvalidInput("re-uploading needs at least one layer");
    if (x.empty()) throw InvalidInput("feature vector is empty");
    const std::size_t blocks = (x.size() + 2) / 3;
    Circuit c(1, 3 * blocks * layers);
    auto feature = [&](std::size_t i) { return i < x.size() ? x[i] : 0.0; };
    std::size_t slot = 0;
    for (std::size_t l = 0; l < layers; ++l) {
        for (std::size_t b = 0; b < blocks; ++b) {
            c.ry(0, feature(3 * b)).rz(0, feature(3 * b + 1)).ry(0, feature(3 * b + 2));
            c.add(Gate::parametric(GateKind::RZ, 0, slot++));
            c.add(Gate::parametric(GateKind::RY, 0, slot++));
            c.add(Gate::parametric(GateKind::RZ, 0, slot++));
        }
    }
    return c;
}

ClassifierResult run_reuploading(const LabeledDataset& data, const ReuploadConfig& cfg, std::uint64_t seed,
                                 prof::EventLog* log, const std::string& run_id) {
    data.validate(true);
    if (cfg.layers < 1) throw InvalidInput("re-uploading needs at least one layer");
    const auto t0 = std::chrono::steady_clock::now();
    prof::RunRecorder recorder(log, run_id, data.size());
    std::vector<Circuit> circuits;
    for (const auto& x : data.features) circuits.push_back(reuploading_circuit(x, cfg.layers));
    const std::size_t m = data.size(), depth = circuits.front().depth();

    ClassifierResult result;
    Meter meter(result.trace.resources, &recorder);
    auto outputs = [&](std::span<const double> params) {
        std::vector<double> z(m);
        for (std::size_t i = 0; i < m; ++i) z[i] = z_expectation(sim::run_statevector(circuits[i], params), 0);
        meter.circuits(m, depth);
        return z;
    };
    const Objective cost = [&](std::span<const double> params) {
        const auto z = outputs(params);
        double c = 0;
        // Fidelity to the pole anchor: (1 + y <Z>) / 2.
        for (std::size_t i = 0; i < m; ++i) c += 1.0 - (1.0 + data.labels[i] * z[i]) / 2;
        ++result.trace.resources.objective_evaluations;
        return c / double(m);
    };
    const auto x0 = initial_parameters(circuits.front().num_params(), seed);
    const auto z0 = outputs(x0);
    result.untrained_accuracy = score(data, [&](std::size_t i) { return z0[i]; }).accuracy;
    auto trace = minimize(cost, x0, cfg.optimizer, sim::substream_seed(seed, 1), true);
    trace.resources = result.trace.resources;
    result.trace = std::move(trace);
    const auto zf = outputs(result.trace.final_params);
    auto s = score(data, [&](std::size_t i) { return zf[i]; });
    result.accuracy = s.accuracy;
    result.predictions = std::move(s.predictions);
    result.depth = depth;
    recorder.finish(seconds_since(t0));
    return result;
}

}  // namespace qutil::algo
