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

#include <doctest.h>

#include <cmath>

#include "qutil/algokit/vqe.hpp"
#include "qutil/error.hpp"
#include "qutil/simcore/random_circuit.hpp"
#include "qutil/simcore/simulator.hpp"

using namespace qutil::algo;
using qutil::sim::transverse_field_ising;

TEST_CASE("VQE on the 2-site TFIM reaches -sqrt(5)") {
    const VqeProblem p{transverse_field_ising(2), build_hea_ansatz(2, 2), ShotConfig::exact_mode()};
    const auto r = run_vqe(p, {}, 7);
    CHECK(std::abs(r.final_energy + std::sqrt(5.0)) < 1e-3);
    CHECK(r.final_energy == doctest::Approx(r.final_exact_energy));
    CHECK(r.circuits_per_evaluation == 2);
}

TEST_CASE("VQE on a single Z reaches -1") {
    const VqeProblem p{PauliSum(1, {{1.0, "Z"}}), build_hea_ansatz(1, 1), ShotConfig::exact_mode()};
    CHECK(std::abs(run_vqe(p, {}, 3).final_energy + 1.0) < 1e-6);
}

TEST_CASE("VQE traces are deterministic and non-increasing") {
    const VqeProblem p{transverse_field_ising(3), build_hea_ansatz(3, 1), ShotConfig::with_shots(500)};
    for (auto kind : {OptimizerKind::CoordinateDescent, OptimizerKind::Spsa}) {
        const OptimizerConfig cfg{.kind = kind, .max_iterations = 15};
        const auto a = run_vqe(p, cfg, 11), b = run_vqe(p, cfg, 11);
        REQUIRE(a.trace.entries.size() == b.trace.entries.size());
        for (std::size_t i = 0; i < a.trace.entries.size(); ++i) {
            CHECK(a.trace.entries[i].objective == b.trace.entries[i].objective);
            if (i) CHECK(a.trace.entries[i].objective <= a.trace.entries[i - 1].objective);
        }
        CHECK(a.trace.final_params == b.trace.final_params);
        CHECK(a.final_energy == a.trace.final_objective());
    }
}

TEST_CASE("variational bound in exact mode over random seeds") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const std::size_t n = 2 + seed % 4;
        const auto h = transverse_field_ising(n, 0.5 + 0.1 * double(seed));
        const double e0 = exact_ground_energy(h);
        const VqeProblem p{h, build_hea_ansatz(n, 2), ShotConfig::exact_mode()};
        const auto r = run_vqe(p, {.max_iterations = 5}, seed);
        for (const auto& e : r.trace.entries) CHECK(e.objective >= e0 - 1e-9);
    }
}

TEST_CASE("shot-mode VQE respects the bound up to sampling noise") {
    const auto h = transverse_field_ising(2);
    const VqeProblem p{h, build_hea_ansatz(2, 2), ShotConfig::for_precision(0.02)};
    CHECK(p.shot_config.shots == 2500);
    const auto r = run_vqe(p, {.max_iterations = 10}, 5);
    CHECK(r.standard_error > 0);
    CHECK(r.final_exact_energy >= exact_ground_energy(h) - 1e-9);
    CHECK(r.final_energy >= exact_ground_energy(h) - 3 * r.standard_error - 0.05);
    // One circuit per group per evaluation.
    CHECK(r.trace.resources.circuits == r.trace.resources.objective_evaluations * 2);
    CHECK(r.trace.resources.shots == r.trace.resources.circuits * 2500);
}

TEST_CASE("shot energy estimates are unbiased within their standard error") {
    const auto h = PauliSum(2, {{0.5, "XY"}, {-0.7, "ZZ"}, {0.3, "YI"}, {0.2, "II"}});
    const auto ansatz = build_hea_ansatz(2, 2);
    const std::vector<double> params = {0.3, -1.2, 2.0, 0.4, -0.8, 1.7, 0.9, -2.2};
    const double exact = qutil::sim::expectation(qutil::sim::run_statevector(ansatz, params), h);
    const auto [est, se] = estimate_energy(h, ansatz, params, 200'000, 99);
    CHECK(std::abs(est - exact) < 5 * se);
    CHECK(se < 0.01);
}

TEST_CASE("parameter-shift gradients match central differences") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const std::size_t n = 2 + seed % 3;
        const auto h = transverse_field_ising(n, 0.7);
        const auto ansatz = build_hea_ansatz(n, 2);
        const Objective f = [&](std::span<const double> x) {
            return qutil::sim::expectation(qutil::sim::run_statevector(ansatz, x), h);
        };
        auto x = initial_parameters(ansatz.num_params(), seed);
        const auto g = parameter_shift_gradient(f, x);
        const double step = 1e-5;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double xi = x[i];
            x[i] = xi + step;
            const double fp = f(x);
            x[i] = xi - step;
            const double fm = f(x);
            x[i] = xi;
            CHECK(std::abs(g[i] - (fp - fm) / (2 * step)) < 1e-6);
        }
    }
}

TEST_CASE("VQE input validation") {
    const VqeProblem p{transverse_field_ising(3), build_hea_ansatz(2, 1), ShotConfig::exact_mode()};
    CHECK_THROWS_AS(run_vqe(p, {}, 1), qutil::InvalidInput);
    CHECK_THROWS_AS(ShotConfig::for_precision(0.0), qutil::InvalidInput);
}
