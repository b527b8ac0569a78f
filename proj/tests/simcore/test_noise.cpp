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

#include "qutil/error.hpp"
#include "qutil/simcore/random_circuit.hpp"
#include "qutil/simcore/simulator.hpp"

using namespace qutil::sim;

TEST_CASE("zero noise reproduces ideal sampling exactly") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto c = random_circuit(4, 40, seed);
        NoiseTally tally;
        const auto noisy = run_noisy(c, {}, NoiseModel{}, 3000, seed, &tally);
        CHECK(noisy == sample_counts(run_statevector(c), 3000, seed));
        CHECK(tally.inserted.empty());
        CHECK(tally.error_free_shots == 3000);
    }
}

TEST_CASE("certain single-qubit noise inserts X, Y, Z uniformly") {
    Circuit c(1);
    c.x(0);
    NoiseTally tally;
    const std::uint64_t shots = 30'000;
    const auto counts = run_noisy(c, {}, NoiseModel{.p1 = 1.0}, shots, 5, &tally);
    CHECK(tally.error_free_shots == 0);
    CHECK(tally.inserted.size() == 3);
    const double sigma = std::sqrt((1.0 / 3) * (2.0 / 3) / shots);
    for (const char* p : {"X", "Y", "Z"}) {
        CAPTURE(p);
        CHECK(std::abs(static_cast<double>(tally.inserted[p]) / shots - 1.0 / 3) < 5 * sigma);
    }
    // X and Y flip |1> back to |0>; only Z leaves "1".
    CHECK(std::abs(frequency(counts, "1") - 1.0 / 3) < 5 * sigma);
    CHECK(std::abs(frequency(counts, "1") - static_cast<double>(tally.inserted["Z"]) / shots) < 1e-12);
}

TEST_CASE("two-qubit noise draws from the 15 non-identity Paulis") {
    Circuit c(2);
    c.cz(0, 1);
    NoiseTally tally;
    run_noisy(c, {}, NoiseModel{.p2 = 1.0}, 15'000, 8, &tally);
    CHECK(tally.inserted.size() == 15);
    CHECK(tally.inserted.count("II") == 0);
}

TEST_CASE("noisy runs are deterministic and reject bad probabilities") {
    const auto c = random_circuit(3, 20, 4);
    const NoiseModel m{.p1 = 0.01, .p2 = 0.05};
    CHECK(run_noisy(c, {}, m, 2000, 77) == run_noisy(c, {}, m, 2000, 77));
    CHECK_THROWS_AS(run_noisy(c, {}, NoiseModel{.p1 = 1.5}, 10, 1), qutil::InvalidInput);
    CHECK_THROWS_AS(run_noisy(c, {}, NoiseModel{.p2 = -0.1}, 10, 1), qutil::InvalidInput);
}

TEST_CASE("success probability decays with depth under noise") {
    // A self-inverse block repeated k times keeps |0..0> ideally; noise erodes it.
    const NoiseModel m{.p1 = 0.01, .p2 = 0.02};
    double previous = 1.0;
    for (std::size_t reps : {1u, 5u, 20u, 60u}) {
        Circuit c(3);
        for (std::size_t r = 0; r < reps; ++r) c.h(0).cnot(0, 1).cnot(1, 2).cnot(1, 2).cnot(0, 1).h(0);
        const double p = frequency(run_noisy(c, {}, m, 20'000, 3), "000");
        CAPTURE(reps);
        CHECK(p < previous);
        previous = p;
    }
    CHECK(previous < 0.8);
}
