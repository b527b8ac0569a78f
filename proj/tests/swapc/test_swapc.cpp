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

#include "qutil/error.hpp"
#include "qutil/simcore/rng.hpp"
#include "qutil/swapc/swapc.hpp"

using namespace qutil::swapc;

namespace {

DeviceSpec device(std::string name, double power, double volume = 1, double weight = 5, double cost = 10) {
    return {std::move(name), power, volume, weight, cost, std::nullopt, std::nullopt, std::nullopt};
}

RunOutcome outcome(double runtime, double power, double err, DeviceSpec d = device("d", 1)) {
    d.power_watts = power;
    return {"abs_energy_error", 1.0, runtime, err, d};
}

}  // namespace

TEST_CASE("score examples") {
    CHECK(score1(1000, 10, 50) == 2.0);
    CHECK(score2(1000, 2, 10, 50) == 1.0);
    CHECK(score1(7.5, 1, 1) == 7.5);
    CHECK(score2(7.5, 1, 3, 4) == score1(7.5, 3, 4));
    for (double bad : {0.0, -1.0}) {
        CHECK_THROWS_AS(score1(bad, 1, 1), qutil::InvalidInput);
        CHECK_THROWS_AS(score1(1, bad, 1), qutil::InvalidInput);
        CHECK_THROWS_AS(score2(1, 1, 1, bad), qutil::InvalidInput);
    }
}

TEST_CASE("score homogeneity and monotonicity over random tuples") {
    qutil::sim::Rng rng(77);
    for (int i = 0; i < 1000; ++i) {
        const double p = rng.uniform(0.1, 1e4), v = rng.uniform(0.1, 100), r = rng.uniform(0.01, 1e3),
                     w = rng.uniform(1, 1e4), k = rng.uniform(1.1, 10);
        const double s1 = score1(p, r, w), s2 = score2(p, v, r, w);
        CHECK(score1(p, r, 2 * w) == doctest::Approx(s1 / 2).epsilon(1e-12));
        CHECK(score2(p, k * v, k * r, k * w) == doctest::Approx(s2 / (k * k * k)).epsilon(1e-12));
        CHECK(score2(p, 1, r, w) == doctest::Approx(s1).epsilon(1e-15));
        CHECK(score1(k * p, r, w) > s1);
        CHECK(score1(p, k * r, w) < s1);
        CHECK(score2(p, k * v, r, w) < s2);
    }
}

TEST_CASE("similarity gate") {
    const auto a = device("a", 10);
    CHECK(similarity_gate(a, a, 1.0));
    CHECK_FALSE(similarity_gate(device("a", 1, 1), device("b", 1, 3), 2));
    CHECK(similarity_gate(device("a", 1, 1, 5, 10), device("b", 1, 2, 9, 19), 2));
    CHECK_THROWS_AS(similarity_gate(a, a, 0.5), qutil::InvalidInput);
    CHECK_THROWS_AS(similarity_gate(device("bad", 1, 0), a), qutil::InvalidInput);
}

TEST_CASE("worked verdicts") {
    SUBCASE("energy win") {
        const auto v = utility_verdict(outcome(5, 50, 1e-3), outcome(4, 100, 1e-3));
        CHECK(v.comparable);
        CHECK_FALSE(v.faster);
        CHECK(v.less_energy);
        CHECK_FALSE(v.more_accurate);
        CHECK(v.verdict == Verdict::QuantumUtility);
    }
    SUBCASE("identical outcomes") {
        const auto v = utility_verdict(outcome(5, 50, 1e-3), outcome(5, 50, 1e-3));
        CHECK(v.verdict == Verdict::NoUtility);
    }
    SUBCASE("dissimilar footprints") {
        const auto v = utility_verdict(outcome(1, 1, 0, device("q", 1, 100)), outcome(10, 100, 1));
        CHECK(v.faster);
        CHECK(v.verdict == Verdict::NotComparable);
    }
    SUBCASE("metric mismatch") {
        auto c = outcome(1, 1, 0);
        c.metric = "accuracy";
        CHECK_THROWS_AS(utility_verdict(outcome(1, 1, 0), c), qutil::InvalidInput);
    }
}

TEST_CASE("criteria are antisymmetric under swapping the outcomes") {
    qutil::sim::Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        const auto q = outcome(rng.uniform(0.1, 10), rng.uniform(1, 100), rng.uniform(0, 1));
        const auto c = outcome(rng.uniform(0.1, 10), rng.uniform(1, 100), rng.uniform(0, 1));
        const auto a = utility_verdict(q, c), b = utility_verdict(c, q);
        CHECK(a.faster != b.faster);
        CHECK(a.less_energy != b.less_energy);
        CHECK(a.more_accurate != b.more_accurate);
    }
}

TEST_CASE("verdict is invariant under a common rescaling of both footprints") {
    qutil::sim::Rng rng(6);
    for (int i = 0; i < 200; ++i) {
        auto q = outcome(rng.uniform(0.1, 10), 20, 0.1, device("q", 20, rng.uniform(1, 4), rng.uniform(1, 4), 5));
        auto c = outcome(rng.uniform(0.1, 10), 30, 0.2, device("c", 30, rng.uniform(1, 4), rng.uniform(1, 4), 7));
        const auto before = utility_verdict(q, c);
        const double k = rng.uniform(0.1, 50);
        for (auto* o : {&q, &c}) {
            o->device.volume_liters *= k;
            o->device.weight_kg *= k;
            o->device.cost *= k;
        }
        CHECK(utility_verdict(q, c).verdict == before.verdict);
    }
}

TEST_CASE("device and outcome JSON") {
    auto d = device("qpu", 25000, 2000, 500, 1e7);
    d.qubit_count = 20;
    d.native_gates = "rz,ry,cz";
    d.topology = "linear";
    CHECK(to_json(device_from_json(to_json(d))) == to_json(d));
    auto j = to_json(d);
    j["power_watts"] = -1;
    CHECK_THROWS_AS(device_from_json(j), qutil::InvalidInput);
    j = to_json(d);
    j["topology"] = "star";
    CHECK_THROWS_AS(device_from_json(j), qutil::InvalidInput);
    CHECK_THROWS_AS(device_from_json(nlohmann::json{{"name", "x"}}), qutil::InvalidInput);
    const auto o = outcome(5, 50, 1e-3);
    CHECK(to_json(outcome_from_json(to_json(o))) == to_json(o));
    const auto v = utility_verdict(o, outcome(4, 100, 1e-3));
    const auto report = verdict_report(o, outcome(4, 100, 1e-3), 2.0, v);
    CHECK(report["verdict"] == "quantum_utility");
    CHECK(report["energy_joules"]["classical"] == 400.0);
    CHECK(verdict_markdown(o, outcome(4, 100, 1e-3), 2.0, v).find("quantum_utility") != std::string::npos);
}
