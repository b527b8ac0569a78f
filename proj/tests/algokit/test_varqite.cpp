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
#include <numbers>

#include "qutil/algokit/varqite.hpp"
#include "qutil/error.hpp"

using namespace qutil::algo;
using qutil::sim::Circuit;
using qutil::sim::Gate;
using qutil::sim::GateKind;

namespace {

Circuit single_ry() {
    Circuit c(1, 1);
    c.add(Gate::parametric(GateKind::RY, 0, 0));
    return c;
}

}  // namespace

TEST_CASE("one-qubit imaginary-time flow reaches the ground state") {
    const PauliSum h(1, {{1.0, "Z"}});
    VarQiteConfig cfg{.dt = 0.1, .steps = 100};
    cfg.initial_params = std::vector<double>{std::numbers::pi / 2};
    const auto r = run_varqite(h, single_ry(), cfg, 1);
    CHECK(std::abs(r.trace.final_objective() + 1.0) < 1e-3);
    // Oracle: for psi = RY(theta)|0>, A = 1/4 and C = sin(theta)/2, so
    // theta_dot = 2 sin(theta) / (1 + 4 lambda). Explicit Euler on that ODE.
    double theta = std::numbers::pi / 2;
    for (int k = 0; k < 100; ++k) theta += 0.1 * 2 * std::sin(theta) / (1 + 4e-6);
    CHECK(std::abs(r.trace.final_params[0] - theta) < 1e-9);
    CHECK(r.circuit_evaluations == varqite_circuit_count(100, 1, 1));
}

TEST_CASE("energy never rises on the 2-site TFIM") {
    const auto h = qutil::sim::transverse_field_ising(2);
    const auto r = run_varqite(h, build_hea_ansatz(2, 2), {.dt = 0.05, .steps = 60}, 3);
    const double e0 = exact_ground_energy(h);
    for (std::size_t i = 1; i < r.trace.entries.size(); ++i) {
        CHECK(r.trace.entries[i].objective <= r.trace.entries[i - 1].objective + 1e-9);
        CHECK(r.trace.entries[i].objective >= e0 - 1e-9);
    }
    CHECK(r.trace.final_objective() < r.trace.entries.front().objective);
    CHECK(r.circuit_evaluations == varqite_circuit_count(r.steps_completed, 8, h.size()));
}

TEST_CASE("circuit accounting formula") {
    CHECK(varqite_circuit_count(10, 4, 3) == 220);
    CHECK(varqite_circuit_count(0, 4, 3) == 0);
}

TEST_CASE("VarQiTE rejects bad input") {
    const PauliSum h(1, {{1.0, "Z"}});
    CHECK_THROWS_AS(run_varqite(h, single_ry(), {.dt = 0.0}, 1), qutil::InvalidInput);
    Circuit shared(1, 1);
    shared.add(Gate::parametric(GateKind::RY, 0, 0)).add(Gate::parametric(GateKind::RZ, 0, 0));
    CHECK_THROWS_AS(run_varqite(h, shared, {}, 1), qutil::InvalidInput);
}
