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

#include <algorithm>
#include <random>
#include <thread>

#include "qutil/algokit/vqe.hpp"
#include "qutil/error.hpp"
#include "qutil/profiler/profile.hpp"

using namespace qutil::prof;

namespace {

std::vector<Event> three_circuits(const std::string& id) {
    EventLog log;
    RunRecorder r(&log, id, 2);
    for (int i = 0; i < 3; ++i) {
        r.circuits(1, 4);
        r.shots(100);
    }
    r.compiled(5, 1, 0);
    r.finish(0.25);
    return log.snapshot();
}

}  // namespace

TEST_CASE("empty run gives an all-zero profile") {
    const auto p = profile(std::vector<Event>{});
    CHECK(p.runs == 0);
    CHECK(p.circuits_executed == 0);
    CHECK(p.total_shots == 0);
    CHECK(p.per_size.empty());
}

TEST_CASE("three circuits of 100 shots") {
    const auto p = profile(three_circuits("a"));
    CHECK(p.circuits_executed == 3);
    CHECK(p.total_shots == 300);
    CHECK(p.max_native_depth == 4);
    CHECK(p.sum_native_depth == 12);
    CHECK(p.max_compiled_depth == 5);
    CHECK(p.wall_runtime_seconds == 0.25);
    CHECK(p.per_size.at(2).circuits == 3);
}

TEST_CASE("aggregation is order independent and additive") {
    auto a = three_circuits("a");
    EventLog log;
    {
        RunRecorder r(&log, "b", 5);
        r.circuits(7, 9);
        r.shots(1234);
        r.finish(1.0);
    }
    const auto b = log.snapshot();
    std::vector<Event> both = a;
    both.insert(both.end(), b.begin(), b.end());
    const auto whole = profile(both);
    CHECK(whole.same_counts(profile(a) + profile(b)));
    std::mt19937 gen(4);
    for (int i = 0; i < 10; ++i) {
        std::shuffle(both.begin(), both.end(), gen);
        CHECK(profile(both).same_counts(whole));
    }
}

TEST_CASE("concurrent identical runs produce identical profiles") {
    qutil::algo::VqeProblem problem{qutil::sim::transverse_field_ising(2), qutil::algo::build_hea_ansatz(2, 1), {}};
    qutil::algo::OptimizerConfig opt;
    opt.max_iterations = 5;
    EventLog l1, l2;
    std::thread t1([&] { qutil::algo::run_vqe(problem, opt, 3, &l1, "r"); });
    std::thread t2([&] { qutil::algo::run_vqe(problem, opt, 3, &l2, "r"); });
    t1.join();
    t2.join();
    const auto p1 = profile(l1), p2 = profile(l2);
    CHECK(p1.circuits_executed > 0);
    CHECK(p1.same_counts(p2));
    CHECK(p1.wall_runtime_seconds > 0);
}

TEST_CASE("missing instrumentation events are reported") {
    auto events = three_circuits("a");
    SUBCASE("no finish") {
        events.erase(std::remove_if(events.begin(), events.end(),
                                    [](const Event& e) { return e.kind == EventKind::RunFinished; }),
                     events.end());
    }
    SUBCASE("no start") {
        events.erase(std::remove_if(events.begin(), events.end(),
                                    [](const Event& e) { return e.kind == EventKind::RunStarted; }),
                     events.end());
    }
    SUBCASE("stray event") { events.push_back({.kind = EventKind::ShotsConsumed, .run_id = "ghost", .count = 1}); }
    SUBCASE("duplicate start") { events.push_back({.kind = EventKind::RunStarted, .run_id = "a"}); }
    CHECK_THROWS_AS(profile(events), qutil::IncompleteProfile);
}

TEST_CASE("profile JSON keeps the runtime under its own key") {
    const auto j = to_json(profile(three_circuits("a")));
    CHECK(j["circuits_executed"] == 3);
    CHECK(j["wall_runtime_seconds"] == 0.25);
    CHECK(j["per_size"]["2"]["shots"] == 300);
}
