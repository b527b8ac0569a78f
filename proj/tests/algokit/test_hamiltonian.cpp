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

#include "dense_oracle.hpp"
#include "qutil/algokit/ansatz.hpp"
#include "qutil/algokit/hamiltonian.hpp"
#include "qutil/error.hpp"
#include "qutil/qcompile/compiler.hpp"

using namespace qutil::algo;
using qutil::sim::transverse_field_ising;

TEST_CASE("exact ground energy examples") {
    CHECK(exact_ground_energy(PauliSum(1, {{1.0, "Z"}})) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(exact_ground_energy(transverse_field_ising(2)) + std::sqrt(5.0)) < 1e-10);
    CHECK(exact_ground_energy(PauliSum(3, {{0.37, "III"}})) == doctest::Approx(0.37));
    CHECK_THROWS_AS(exact_ground_energy(PauliSum(13, {{1.0, std::string(13, 'Z')}})), qutil::SizeLimitError);
}

TEST_CASE("ground energy agrees with an independent dense matrix, including complex terms") {
    const PauliSum h(3, {{0.4, "XYZ"}, {-0.9, "YYI"}, {0.2, "IZY"}, {1.1, "ZIZ"}, {-0.3, "XII"}});
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(oracle::pauli_sum_matrix(h));
    CHECK(std::abs(exact_ground_energy(h) - es.eigenvalues().minCoeff()) < 1e-10);
    const auto tfim = transverse_field_ising(6, 0.8);
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es2(oracle::pauli_sum_matrix(tfim));
    CHECK(std::abs(exact_ground_energy(tfim) - es2.eigenvalues().minCoeff()) < 1e-10);
}

TEST_CASE("qubit-wise commuting groups") {
    CHECK(group_pauli_terms(PauliSum(2, {{1, "ZZ"}, {1, "ZI"}, {1, "IZ"}})).size() == 1);
    CHECK(group_pauli_terms(PauliSum(2, {{1, "XX"}, {1, "ZZ"}})).size() == 2);
    CHECK(group_pauli_terms(PauliSum(2, {{1, "XI"}, {1, "IZ"}, {1, "XZ"}})).size() == 1);
    CHECK(measurement_circuit_count(PauliSum(2, {{1, "II"}})) == 0);
}

TEST_CASE("grouping is a partition into qubit-wise commuting sets") {
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto h = transverse_field_ising(n);
        const auto groups = group_pauli_terms(h);
        std::vector<int> seen(h.size(), 0);
        for (const auto& g : groups) {
            for (std::size_t a : g) {
                ++seen[a];
                for (std::size_t b : g) CHECK(qubit_wise_commute(h.terms()[a].word, h.terms()[b].word));
            }
        }
        for (int s : seen) CHECK(s == 1);
        CHECK(groups.size() <= h.size());
        CHECK(groups.size() == 2);  // all ZZ, then all X
    }
}

TEST_CASE("hardware-efficient ansatz construction") {
    const auto a = build_hea_ansatz(2, 1);
    CHECK(a.num_params() == 4);
    CHECK(a.count(qutil::sim::GateKind::CZ) == 1);
    CHECK(build_hea_ansatz(4, 3).num_params() == 24);
    CHECK(slots_used_once(build_hea_ansatz(5, 2)));
    using namespace qutil::compile;
    const auto c = compile(build_hea_ansatz(6, 2), NativeGateSet::defaults(), Topology(TopologyKind::Linear, 6));
    CHECK(c.stats.swap_inserted == 0);
    CHECK_THROWS_AS(build_hea_ansatz(0, 1), qutil::InvalidInput);
    CHECK_THROWS_AS(build_hea_ansatz(2, 0), qutil::InvalidInput);
}
