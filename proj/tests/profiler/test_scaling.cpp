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

#include "qutil/algokit/ansatz.hpp"
#include "qutil/error.hpp"
#include "qutil/profiler/scaling.hpp"
#include "qutil/profiler/table_check.hpp"
#include "qutil/qcompile/compiler.hpp"
#include "qutil/simcore/rng.hpp"

using namespace qutil::prof;
using qutil::arl::Growth;

namespace {

std::string fitted(std::vector<Sample> s) { return to_string(fit_scaling(std::move(s)).best_class); }

}  // namespace

TEST_CASE("fit_scaling examples") {
    CHECK(fitted({{4, 8}, {6, 12}, {8, 16}, {10, 20}}) == "linear");
    CHECK(fitted({{2, 4}, {3, 8}, {4, 16}, {5, 32}}) == "exponential");
    CHECK(fitted({{4, 7}, {6, 7}, {8, 7}, {10, 7}}) == "constant");
    CHECK(fitted({{4, 6}, {6, 15}, {8, 28}, {10, 45}, {12, 66}}) == "quadratic");  // |T|(|T|-1)/2
    CHECK(fitted({{4, 12}, {6, 16}, {8, 20}, {10, 24}, {12, 28}}) == "linear");   // affine 2N + 4
}

TEST_CASE("fit_scaling recovers generating classes for random coefficients") {
    qutil::sim::Rng rng(2024);
    const std::vector<std::vector<double>> size_sets = {
        {2, 3, 4, 5}, {4, 6, 8, 10}, {1, 2, 3, 4, 5, 6}, {3, 5, 7, 9, 11}, {2, 4, 6, 8, 10, 12}};
    int correct = 0, total = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto& sizes = size_sets[std::size_t(trial) % size_sets.size()];
        const int cls = trial % 5;  // constant, linear, quadratic, cubic, exponential
        const double a = rng.uniform(0.1, 100.0), b = rng.uniform(1.2, 4.0);
        std::vector<Sample> s;
        for (double n : sizes) {
            const double y = cls == 4 ? a * std::pow(b, n) : a * std::pow(n, cls);
            s.push_back({n, y});
        }
        const auto fit = fit_scaling(s);
        const Growth want = cls == 4 ? Growth::exponential() : Growth::polynomial(cls);
        CAPTURE(trial);
        CHECK(to_string(fit.best_class) == to_string(want));
        correct += fit.best_class == want;
        ++total;
    }
    CHECK(correct == total);
}

TEST_CASE("fit_scaling preconditions") {
    CHECK_THROWS_AS(fit_scaling({{1, 1}, {2, 2}, {3, 3}}), qutil::InvalidInput);
    CHECK_THROWS_AS(fit_scaling({{1, 1}, {1, 2}, {2, 3}, {3, 4}}), qutil::InvalidInput);
    CHECK_THROWS_AS(fit_scaling({{1, 1}, {2, 0}, {3, 3}, {4, 4}}), qutil::InvalidInput);
    const auto fit = fit_scaling({{4, 8}, {6, 12}, {8, 16}, {10, 20}}, "|T|");
    CHECK(fit.variable == "|T|");
    CHECK(fit.best_r_squared == doctest::Approx(1.0));
    REQUIRE(fit.candidates.size() == 4);
    CHECK(fit.candidates[3].model == "offset_power");
    CHECK(to_json(fit)["best_class"] == "linear");
}

TEST_CASE("HEA compiled depth on a linear chain grows linearly and matches the VQE depth cell") {
    using namespace qutil::compile;
    std::vector<Sample> s;
    for (std::size_t n : {4u, 6u, 8u, 10u, 12u}) {
        const auto c = compile(qutil::algo::build_hea_ansatz(n, 2), NativeGateSet::defaults(),
                               Topology(TopologyKind::Linear, n));
        CHECK(c.stats.swap_inserted == 0);
        s.push_back({double(n), double(c.stats.native_depth)});
    }
    const auto fit = fit_scaling(s, "N");
    CHECK(to_string(fit.best_class) == "linear");
    const auto row = verify_table_row("vqe", {{"depth", fit}});
    CHECK(row.cells[1].status == qutil::arl::CellStatus::Match);
    CHECK(row.cells[0].status == qutil::arl::CellStatus::NotMeasured);
}

TEST_CASE("verify_table_row") {
    const auto quad = fit_scaling({{4, 6}, {6, 15}, {8, 28}, {10, 45}}, "|T|");
    const auto qk = verify_table_row("qk", {{"circuits", quad}});
    CHECK(qk.cells[0].status == qutil::arl::CellStatus::Match);
    CHECK(qk.cells[0].expected == Growth::polynomial(2));

    const auto flat = fit_scaling({{2, 2}, {3, 2}, {4, 2}, {5, 2}}, "N");
    const auto vqe = verify_table_row("vqe", {{"circuits", flat}});
    CHECK(vqe.cells[0].status == qutil::arl::CellStatus::Mismatch);
    REQUIRE(vqe.cells[0].measured.has_value());
    CHECK(to_string(*vqe.cells[0].measured) == "constant");
    CHECK(vqe.cells[0].samples.size() == 4);

    CHECK_THROWS_AS(verify_table_row("qnbm", {}), qutil::InvalidInput);
    CHECK_THROWS_AS(verify_table_row("shor", {}), qutil::InvalidInput);
    CHECK_THROWS_AS(verify_table_row("vqe", {{"width", flat}}), qutil::InvalidInput);
    CHECK(is_implemented_app("re-uploading"));
    CHECK(default_variable("varqite", "circuits") == "t");
}

TEST_CASE("fit_scaling degree ignores large additive offsets") {
    // Offsets that pull the log-log slope far below the true degree.
    CHECK(fitted({{4, 11}, {6, 13}, {8, 15}, {10, 17}, {12, 19}}) == "linear");
    CHECK(fitted({{2, 6}, {3, 8}, {4, 9}, {5, 10}, {6, 11}, {7, 12}, {8, 13}}) == "linear");  // irregular first step
    // Growth below the margin (0.6% relative) is not resolved.
    CHECK(fitted({{4, 1004}, {6, 1006}, {8, 1008}, {10, 1010}}) == "constant");
    CHECK(fitted({{2, 11}, {4, 26}, {6, 49}, {8, 80}, {10, 119}}) == "quadratic");  // N^2 + 1.5N + 4
    // Repeated sizes are averaged; a noisy flat series stays constant.
    CHECK(fitted({{2, 400}, {3, 401}, {4, 399}, {5, 400}, {5, 400}}) == "constant");
    const auto affine = fit_scaling({{4, 11}, {6, 13}, {8, 15}, {10, 17}});
    REQUIRE(affine.degree_scores.size() == 9);
    CHECK(affine.degree_scores[1] == doctest::Approx(1.0));
}

TEST_CASE("lower-order terms neither fake an exponential nor hide the degree") {
    // n^2 + 2n + 3.6 from n = 1: the pure power law bends, the exponential
    // fits it better, and only the offset comparison keeps it polynomial.
    std::vector<Sample> q;
    for (double n = 1; n <= 5; ++n) q.push_back({n, n * n + 2 * n + 3.6});
    const auto fit = fit_scaling(q);
    CHECK(fit.best_class == Growth::polynomial(2));
    CHECK(fit.candidates[2].score > fit.candidates[1].score);  // exponential beats the pure power law
    CHECK(fit.degree_scores[2] == doctest::Approx(1.0));

    // 2^N - 1 keeps its exponential class against the offset powers.
    std::vector<Sample> e;
    for (double n = 2; n <= 5; ++n) e.push_back({n, std::pow(2.0, n) - 1});
    CHECK(fit_scaling(e).best_class == Growth::exponential());
}
