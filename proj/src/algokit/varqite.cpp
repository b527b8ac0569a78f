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

#include "qutil/algokit/varqite.hpp"

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <numbers>

#include "qutil/algokit/ansatz.hpp"
#include "qutil/algokit/optimizer.hpp"
#include "qutil/error.hpp"
#include "qutil/qcompile/compiler.hpp"
#include "qutil/simcore/simulator.hpp"

namespace qutil::algo {

namespace {

using Amp = std::complex<double>;
using sim::StateVector;

double norm(const std::vector<double>& x) {
    double s = 0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

std::vector<Amp> apply_hamiltonian(const PauliSum& h, const StateVector& psi) {
    std::vector<Amp> out(psi.dimension(), Amp(0.0));
    for (const auto& t : h.terms()) {
        StateVector p = psi;
        p.apply_pauli(sim::pauli_mask(t.word));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += t.coefficient * p[i];
    }
    return out;
}

Amp inner(std::span<const Amp> a, std::span<const Amp> b) {
    return sim::kernels::parallel::inner_product(a, b);
}

}  // namespace

std::uint64_t varqite_circuit_count(std::uint64_t t, std::uint64_t q, std::uint64_t p) {
    return t * (q * (q + 1) / 2 + q * p);
}

VarQiteResult run_varqite(const PauliSum& h, const Circuit& ansatz, const VarQiteConfig& cfg, std::uint64_t seed,
                          prof::EventLog* log, const std::string& run_id) {
    if (!(cfg.dt > 0)) throw InvalidInput("dt must be > 0");
    if (!(cfg.regularization >= 0)) throw InvalidInput("regularization must be >= 0");
    if (h.num_qubits() != ansatz.num_qubits()) throw InvalidInput("ansatz and Hamiltonian qubit counts differ");
    const std::size_t q = ansatz.num_params();
    if (q == 0 || !slots_used_once(ansatz)) {
        throw InvalidInput("VarQiTE needs an ansatz whose every parameter drives exactly one rotation");
    }
    std::vector<double> theta = cfg.initial_params.value_or(initial_parameters(q, seed));
    if (theta.size() != q) throw InvalidInput("initial parameter vector has the wrong length");

    const auto t0 = std::chrono::steady_clock::now();
    prof::RunRecorder recorder(log, run_id, h.num_qubits());
    const auto compiled = compile::compile(ansatz, compile::NativeGateSet::defaults(),
                                           compile::Topology(compile::TopologyKind::Linear, ansatz.num_qubits()));
    recorder.compiled(compiled.stats.native_depth, compiled.stats.two_qubit_count, compiled.stats.swap_inserted);
    const std::uint64_t per_step = varqite_circuit_count(1, q, h.size());

    VarQiteResult result;
    Meter meter(result.trace.resources, &recorder);
    auto energy_at = [&](const std::vector<double>& x) {
        return sim::expectation(sim::run_statevector(ansatz, x), h);
    };
    double energy = energy_at(theta);
    result.trace.entries.push_back({energy, norm(theta)});

    Eigen::MatrixXd a(q, q);
    Eigen::VectorXd c(q);
    for (std::size_t step = 0; step < cfg.steps; ++step) {
        const StateVector psi = sim::run_statevector(ansatz, theta);
        const auto h_psi = apply_hamiltonian(h, psi);
        std::vector<StateVector> d;
        d.reserve(q);
        for (std::size_t i = 0; i < q; ++i) {
            auto shifted = theta;
            shifted[i] += std::numbers::pi;
            d.push_back(sim::run_statevector(ansatz, shifted));  // 2 d_i psi
        }
        for (std::size_t i = 0; i < q; ++i) {
            for (std::size_t j = i; j < q; ++j) {
                a(i, j) = a(j, i) = 0.25 * inner(d[i].amplitudes(), d[j].amplitudes()).real();
            }
            c(i) = -0.5 * inner(d[i].amplitudes(), h_psi).real();
        }
        meter.circuits(per_step, compiled.stats.native_depth);
        result.circuit_evaluations += per_step;
        ++result.steps_completed;

        a.diagonal().array() += cfg.regularization;
        const Eigen::LDLT<Eigen::MatrixXd> solver(a);
        Eigen::VectorXd theta_dot = solver.solve(c);
        const bool solved = solver.info() == Eigen::Success && theta_dot.allFinite();

        double dt = cfg.dt;
        bool accepted = false;
        for (std::size_t attempt = 0; attempt <= cfg.max_halvings; ++attempt, dt /= 2) {
            if (!solved) {
                ++result.rejected_attempts;
                continue;
            }
            std::vector<double> next = theta;
            for (std::size_t i = 0; i < q; ++i) next[i] += dt * theta_dot(static_cast<Eigen::Index>(i));
            const double e = energy_at(next);
            if (std::isfinite(e) && e <= energy + cfg.increase_tolerance) {
                theta = std::move(next);
                energy = e;
                accepted = true;
                break;
            }
            ++result.rejected_attempts;
        }
        if (!accepted) {
            if (!solved) {
                throw NumericalError("VarQiTE step " + std::to_string(step) +
                                     ": linear system (A + lambda I) theta_dot = C is singular");
            }
            result.stalled = true;
            result.trace.diagnostics.push_back("stalled at step " + std::to_string(step) +
                                               ": energy rises for every dt down to " + std::to_string(dt * 2));
            break;
        }
        result.trace.entries.push_back({energy, norm(theta)});
    }
    result.trace.final_params = theta;
    result.trace.converged = !result.stalled;
    result.trace.resources.objective_evaluations = result.steps_completed;
    recorder.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return result;
}

}  // namespace qutil::algo
