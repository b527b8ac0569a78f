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

#include "qutil/algokit/vqe.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "qutil/error.hpp"
#include "qutil/qcompile/compiler.hpp"
#include "qutil/simcore/rng.hpp"
#include "qutil/simcore/simulator.hpp"

namespace qutil::algo {

namespace {

std::string group_basis(const PauliSum& h, const std::vector<std::size_t>& group) {
    std::string basis(h.num_qubits(), 'I');
    for (std::size_t k : group) {
        const auto& w = h.terms()[k].word;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != 'I') basis[i] = w[i];
        }
    }
    return basis;
}

bool is_identity(const std::string& w) { return w.find_first_not_of('I') == std::string::npos; }

// Maps the letters of `basis` onto Z: H for X, RZ(-pi/2) then H for Y.
void append_basis_change(Circuit& c, const std::string& basis) {
    const std::size_t n = basis.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t q = n - 1 - i;
        if (basis[i] == 'X') c.h(q);
        if (basis[i] == 'Y') c.rz(q, -std::numbers::pi / 2).h(q);
    }
}

}  // namespace

ShotConfig ShotConfig::with_shots(std::uint64_t shots) {
    if (shots == 0) throw InvalidInput("shots must be >= 1");
    return {false, shots};
}

ShotConfig ShotConfig::for_precision(double epsilon) {
    if (!(epsilon > 0)) throw InvalidInput("target precision must be > 0");
    return with_shots(static_cast<std::uint64_t>(std::ceil(1.0 / (epsilon * epsilon))));
}

std::vector<Circuit> measurement_circuits(const PauliSum& h, const Circuit& ansatz) {
    std::vector<Circuit> out;
    for (const auto& group : group_pauli_terms(h)) {
        const std::string basis = group_basis(h, group);
        if (is_identity(basis)) continue;
        Circuit c = ansatz;
        append_basis_change(c, basis);
        out.push_back(std::move(c));
    }
    return out;
}

std::pair<double, double> estimate_energy(const PauliSum& h, const Circuit& ansatz, std::span<const double> params,
                                          std::uint64_t shots, std::uint64_t seed) {
    const std::size_t n = h.num_qubits();
    double energy = 0.0, variance = 0.0;
    std::uint64_t g_index = 0;
    for (const auto& group : group_pauli_terms(h)) {
        const std::string basis = group_basis(h, group);
        if (is_identity(basis)) {
            for (std::size_t k : group) energy += h.terms()[k].coefficient;
            continue;
        }
        Circuit c = ansatz;
        append_basis_change(c, basis);
        const auto counts = sim::sample_counts(sim::run_statevector(c, params), shots, seed + g_index++);
        // Per-shot value of the group observable; mean and variance over shots.
        double sum = 0, sum_sq = 0;
        for (const auto& [bits, count] : counts) {
            double v = 0;
            for (std::size_t k : group) {
                const auto& w = h.terms()[k].word;
                int parity = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (w[i] != 'I' && bits[i] == '1') parity ^= 1;
                }
                v += parity ? -h.terms()[k].coefficient : h.terms()[k].coefficient;
            }
            sum += v * double(count);
            sum_sq += v * v * double(count);
        }
        const double s = double(shots);
        const double mean = sum / s;
        energy += mean;
        variance += std::max(0.0, sum_sq / s - mean * mean) / s;
    }
    return {energy, std::sqrt(variance)};
}

VqeResult run_vqe(const VqeProblem& problem, const OptimizerConfig& optimizer, std::uint64_t seed,
                  prof::EventLog* log, const std::string& run_id) {
    const auto& h = problem.hamiltonian;
    const auto& ansatz = problem.ansatz;
    if (h.num_qubits() != ansatz.num_qubits()) {
        throw InvalidInput("ansatz has " + std::to_string(ansatz.num_qubits()) + " qubits, Hamiltonian has " +
                           std::to_string(h.num_qubits()));
    }
    const auto t0 = std::chrono::steady_clock::now();
    prof::RunRecorder recorder(log, run_id, h.num_qubits());
    VqeResult result;

    const auto circuits = measurement_circuits(h, ansatz);
    result.circuits_per_evaluation = circuits.size();
    const auto natives = compile::NativeGateSet::defaults();
    const compile::Topology line(compile::TopologyKind::Linear, h.num_qubits());
    for (const auto& c : circuits) {
        const auto compiled = compile::compile(c, natives, line);
        result.compiled_depth = std::max(result.compiled_depth, compiled.stats.native_depth);
        recorder.compiled(compiled.stats.native_depth, compiled.stats.two_qubit_count, compiled.stats.swap_inserted);
    }

    Resources totals;
    Meter meter(totals, &recorder);
    const bool exact = problem.shot_config.exact;
    const std::uint64_t shots = problem.shot_config.shots;
    const std::uint64_t shot_base = sim::substream_seed(seed, 2);
    std::uint64_t evaluation = 0;
    const Objective energy = [&](std::span<const double> params) {
        meter.circuits(circuits.size(), result.compiled_depth, exact ? 0 : shots);
        ++totals.objective_evaluations;
        if (exact) return sim::expectation(sim::run_statevector(ansatz, params), h);
        const std::uint64_t s = shot_base + evaluation * (circuits.size() + 1);
        ++evaluation;
        return estimate_energy(h, ansatz, params, shots, s).first;
    };

    result.trace = minimize(energy, initial_parameters(ansatz.num_params(), seed), optimizer,
                            sim::substream_seed(seed, 1), ansatz.num_params() > 0 && slots_used_once(ansatz));
    result.trace.resources = totals;
    result.final_energy = result.trace.final_objective();
    result.final_exact_energy = sim::expectation(sim::run_statevector(ansatz, result.trace.final_params), h);
    if (!exact) {
        result.standard_error =
            estimate_energy(h, ansatz, result.trace.final_params, shots, sim::substream_seed(seed, 3)).second;
    }
    if (!result.trace.converged) result.trace.diagnostics.push_back("not converged after max iterations");
    recorder.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return result;
}

}  // namespace qutil::algo
