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

#include "qutil/algokit/qcbm.hpp"

#include <chrono>
#include <cmath>

#include "qutil/algokit/ansatz.hpp"
#include "qutil/error.hpp"
#include "qutil/simcore/rng.hpp"

namespace qutil::algo {

TargetDistribution TargetDistribution::point_mass(const std::string& bits) {
    TargetDistribution t;
    t.num_qubits = bits.size();
    if (t.num_qubits == 0 || t.num_qubits > kMaxQcbmQubits) throw InvalidInput("point mass needs 1..8 qubits");
    t.probabilities.assign(std::size_t{1} << t.num_qubits, 0.0);
    t.probabilities[sim::parse_bitstring(bits)] = 1.0;
    return t;
}

TargetDistribution TargetDistribution::uniform(std::size_t num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQcbmQubits) throw InvalidInput("uniform target needs 1..8 qubits");
    const std::size_t dim = std::size_t{1} << num_qubits;
    return {num_qubits, std::vector<double>(dim, 1.0 / double(dim))};
}

void TargetDistribution::validate() const {
    if (num_qubits == 0 || num_qubits > kMaxQcbmQubits) {
        throw SizeLimitError("QCBM targets are limited to 1.." + std::to_string(kMaxQcbmQubits) + " qubits");
    }
    if (probabilities.size() != (std::size_t{1} << num_qubits)) throw InvalidInput("target length is not 2^N");
    double sum = 0;
    for (double p : probabilities) {
        if (!(p >= 0)) throw InvalidInput("target probabilities must be non-negative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw InvalidInput("target probabilities must sum to 1");
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw InvalidInput("distributions differ in length");
    double d = 0;
    for (std::size_t i = 0; i < p.size(); ++i) d += std::abs(p[i] - q[i]);
    return d / 2;
}

double total_variation(const sim::Counts& counts, const TargetDistribution& target) {
    std::vector<double> p(target.probabilities.size(), 0.0);
    const double total = double(sim::total_shots(counts));
    for (const auto& [bits, c] : counts) p[sim::parse_bitstring(bits)] = double(c) / total;
    return total_variation(p, target.probabilities);
}

sim::Counts sample_batched(const sim::StateVector& state, std::uint64_t shots, std::size_t batches,
                           std::uint64_t seed) {
    if (shots == 0) throw InvalidInput("shots must be >= 1");
    batches = std::max<std::size_t>(1, std::min<std::uint64_t>(batches, shots));
    std::vector<sim::Counts> parts(batches);
    const auto nb = static_cast<std::int64_t>(batches);
#pragma omp parallel for
    for (std::int64_t b = 0; b < nb; ++b) {
        const auto ub = static_cast<std::uint64_t>(b);
        const std::uint64_t n = shots / batches + (ub < shots % batches ? 1 : 0);
        parts[ub] = sim::sample_counts(state, n, seed + ub);
    }
    sim::Counts merged;
    for (const auto& part : parts) {
        for (const auto& [bits, c] : part) merged[bits] += c;
    }
    return merged;
}

QcbmResult run_qcbm(const TargetDistribution& target, const QcbmConfig& cfg, std::uint64_t seed,
                    prof::EventLog* log, const std::string& run_id) {
    target.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = target.num_qubits;
    prof::RunRecorder recorder(log, run_id, n);
    const sim::Circuit ansatz = build_hea_ansatz(n, cfg.layers);
    const std::size_t depth = ansatz.depth();

    QcbmResult result;
    Meter meter(result.trace.resources, &recorder);
    const std::uint64_t shot_base = sim::substream_seed(seed, 2);
    std::uint64_t evaluation = 0;
    const Objective loss = [&](std::span<const double> params) {
        const auto state = sim::run_statevector(ansatz, params);
        meter.circuits(1, depth, cfg.shots);
        ++result.trace.resources.objective_evaluations;
        if (cfg.shots == 0) return total_variation(state.probabilities(), target.probabilities);
        const std::uint64_t s = shot_base + evaluation * std::max<std::size_t>(cfg.batches, 1);
        ++evaluation;
        return total_variation(sample_batched(state, cfg.shots, cfg.batches, s), target);
    };
    auto trace = minimize(loss, initial_parameters(ansatz.num_params(), seed), cfg.optimizer,
                          sim::substream_seed(seed, 1), false);
    trace.resources = result.trace.resources;
    result.trace = std::move(trace);
    const std::uint64_t resolvable = 10 * (std::uint64_t{1} << n);
    if (cfg.shots != 0 && cfg.shots < resolvable) {
        result.trace.diagnostics.push_back("warning: " + std::to_string(cfg.shots) + " shots cannot resolve a " +
                                           std::to_string(n) + "-qubit target (need >= " +
                                           std::to_string(resolvable) + ")");
    }
    result.final_tvd = total_variation(sim::run_statevector(ansatz, result.trace.final_params).probabilities(),
                                       target.probabilities);
    recorder.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return result;
}

double expected_uniform_tvd(std::size_t num_qubits, std::uint64_t shots) {
    if (num_qubits == 0 || num_qubits > 62) throw InvalidInput("uniform TVD needs 1..62 qubits");
    if (shots == 0) throw InvalidInput("shots must be >= 1");
    const double k = std::ldexp(1.0, int(num_qubits));
    const double s = double(shots), p = 1.0 / k, q = 1.0 - p;
    // E|B - Sp| = 2 nu C(S, nu) p^nu q^(S - nu + 1), nu = floor(Sp) + 1.
    const double nu = std::floor(s * p) + 1.0;
    const double log_mad = std::log(2.0 * nu) + std::lgamma(s + 1) - std::lgamma(nu + 1) - std::lgamma(s - nu + 1) +
                           nu * std::log(p) + (s - nu + 1) * std::log(q);
    return 0.5 * k * std::exp(log_mad) / s;
}

std::uint64_t shots_to_resolve(std::size_t num_qubits, double tol) {
    if (!(tol > 0 && tol < 1)) throw InvalidInput("TVD tolerance must lie in (0, 1)");
    constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 32;
    for (std::uint64_t s = 1; s <= kScanLimit; ++s) {
        if (expected_uniform_tvd(num_qubits, s) <= tol) return s;
    }
    throw NumericalError("shots_to_resolve exceeded 2^32 shots");
}

}  // namespace qutil::algo
