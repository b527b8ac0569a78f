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
#include <cstdint>
#include <numbers>

#include "qutil/algokit/qcbm.hpp"
#include "qutil/error.hpp"

using namespace qutil::algo;

TEST_CASE("QCBM learns a point mass") {
    QcbmConfig cfg;
    cfg.shots = 2000;
    const auto r = run_qcbm(TargetDistribution::point_mass("00"), cfg, 3);
    MESSAGE("point-mass final TVD " << r.final_tvd);
    CHECK(r.final_tvd <= 0.05);
    CHECK(r.trace.diagnostics.empty());
}

TEST_CASE("|00> against the uniform 2-qubit target has TVD 0.75") {
    const qutil::sim::StateVector zero(2);
    CHECK(total_variation(zero.probabilities(), TargetDistribution::uniform(2).probabilities) ==
          doctest::Approx(0.75));
}

TEST_CASE("too few shots are flagged") {
    QcbmConfig cfg;
    cfg.shots = 20;
    cfg.optimizer.max_iterations = 2;
    const auto r = run_qcbm(TargetDistribution::uniform(3), cfg, 1);
    REQUIRE(r.trace.diagnostics.size() == 1);
    CHECK(r.trace.diagnostics[0].find("warning") == 0);
}

TEST_CASE("batched sampling is deterministic and totals the shots") {
    qutil::sim::Circuit c(3);
    c.h(0).h(1).h(2);
    const auto s = qutil::sim::run_statevector(c);
    const auto a = sample_batched(s, 1001, 4, 5);
    CHECK(a == sample_batched(s, 1001, 4, 5));
    CHECK(qutil::sim::total_shots(a) == 1001);
}

namespace {

// (K/2) sum_b P(B = b) |b/S - 1/K| with the binomial pmf built by recurrence.
double binomial_sum_tvd(std::size_t n, std::uint64_t shots) {
    const double k = double(std::size_t{1} << n), p = 1.0 / k, q = 1.0 - p;
    double pmf = std::pow(q, double(shots)), sum = 0.0;
    for (std::uint64_t b = 0; b <= shots; ++b) {
        sum += pmf * std::abs(double(b) / double(shots) - p);
        pmf *= double(shots - b) / double(b + 1) * p / q;
    }
    return 0.5 * k * sum;
}

}  // namespace

TEST_CASE("expected uniform TVD matches a direct binomial sum and Monte Carlo") {
    for (std::size_t n : {1u, 2u, 3u, 5u}) {
        for (std::uint64_t shots : {1u, 2u, 7u, 64u, 500u}) {
            CAPTURE(n);
            CAPTURE(shots);
            CHECK(expected_uniform_tvd(n, shots) == doctest::Approx(binomial_sum_tvd(n, shots)).epsilon(1e-9));
        }
    }
    qutil::sim::Circuit c(3);
    c.h(0).h(1).h(2);
    const auto state = qutil::sim::run_statevector(c);
    const auto uniform = TargetDistribution::uniform(3);
    constexpr int kTrials = 4000;
    double sum = 0, sum_sq = 0;
    for (int t = 0; t < kTrials; ++t) {
        const double v = total_variation(qutil::sim::sample_counts(state, 100, 1000 + t), uniform);
        sum += v;
        sum_sq += v * v;
    }
    const double mean = sum / kTrials, sem = std::sqrt((sum_sq / kTrials - mean * mean) / kTrials);
    CHECK(std::abs(mean - expected_uniform_tvd(3, 100)) < 5 * sem);
    CHECK_THROWS_AS(expected_uniform_tvd(0, 10), qutil::InvalidInput);
    CHECK_THROWS_AS(expected_uniform_tvd(2, 0), qutil::InvalidInput);
}

TEST_CASE("shots to resolve a uniform target are minimal and grow like 2^N - 1") {
    const double tol = 0.05;
    std::uint64_t previous = 0;
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto s = shots_to_resolve(n, tol);
        CAPTURE(n);
        CHECK(expected_uniform_tvd(n, s) <= tol);
        for (std::uint64_t smaller = 1; smaller < s; ++smaller) REQUIRE(expected_uniform_tvd(n, smaller) > tol);
        // Normal approximation: E[TVD] ~ sqrt((K - 1) / (2 pi S)).
        const double predicted = double((std::size_t{1} << n) - 1) / (2 * std::numbers::pi * tol * tol);
        CHECK(double(s) == doctest::Approx(predicted).epsilon(0.05));
        CHECK(s > previous);
        previous = s;
    }
    CHECK_THROWS_AS(shots_to_resolve(2, 0.0), qutil::InvalidInput);
}

TEST_CASE("target validation") {
    TargetDistribution t{2, {0.5, 0.5, 0.1, 0.0}};
    CHECK_THROWS_AS(t.validate(), qutil::InvalidInput);
    CHECK_THROWS_AS(TargetDistribution::uniform(9), qutil::InvalidInput);
}
