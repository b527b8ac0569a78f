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

#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "qutil/simcore/kernels.hpp"
#include "qutil/simcore/pauli_sum.hpp"
#include "qutil/simcore/rng.hpp"
#include "qutil/simcore/state_vector.hpp"

using namespace qutil::sim;
using kernels::Amp;

namespace {

std::vector<Amp> random_amps(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Amp> v(std::size_t{1} << n);
    double norm = 0;
    for (auto& a : v) {
        a = Amp(rng.uniform(-1, 1), rng.uniform(-1, 1));
        norm += std::norm(a);
    }
    for (auto& a : v) a /= std::sqrt(norm);
    return v;
}

void check_same(const std::vector<Amp>& a, const std::vector<Amp>& b) {
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        // Gate kernels do the same arithmetic per amplitude, so they agree exactly.
        CHECK(a[i] == b[i]);
    }
}

}  // namespace

TEST_CASE("parallel gate kernels match the serial reference") {
    // 13 qubits crosses kParallelMinQubits so the OpenMP path is exercised.
    for (std::size_t n : {3u, 6u, 13u}) {
        CAPTURE(n);
        const auto base = random_amps(n, 7 + n);
        const auto m = gate_matrix(GateKind::RY, 0.37);
        for (std::size_t t = 0; t < n; t += 2) {
            auto a = base, b = base;
            kernels::serial::apply_1q(a, t, m);
            kernels::parallel::apply_1q(b, t, m);
            check_same(a, b);
        }
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t t = (c + 2) % n;
            auto a = base, b = base;
            kernels::serial::apply_cnot(a, c, t);
            kernels::parallel::apply_cnot(b, c, t);
            check_same(a, b);
            kernels::serial::apply_cz(a, c, t);
            kernels::parallel::apply_cz(b, c, t);
            check_same(a, b);
            kernels::serial::apply_swap(a, t, c);
            kernels::parallel::apply_swap(b, t, c);
            check_same(a, b);
            const std::size_t t2 = (c + 1) % n;
            kernels::serial::apply_ccnot(a, c, t, t2);
            kernels::parallel::apply_ccnot(b, c, t, t2);
            check_same(a, b);
        }
    }
}

TEST_CASE("pauli kernels match the serial reference") {
    const std::size_t n = 13;
    const auto base = random_amps(n, 99);
    for (const char* w : {"IIIIIIIIIIIIZ", "XIIIIIIIIIIIY", "ZZYXIIIIXIIZI", "YYYYYYYYYYYYY"}) {
        CAPTURE(w);
        const auto p = pauli_mask(w);
        auto a = base, b = base;
        kernels::serial::apply_pauli(a, p);
        kernels::parallel::apply_pauli(b, p);
        check_same(a, b);
        CHECK(kernels::serial::pauli_expectation(base, p) ==
              doctest::Approx(kernels::parallel::pauli_expectation(base, p)).epsilon(1e-12));
    }
    CHECK(kernels::serial::norm_squared(base) == doctest::Approx(kernels::parallel::norm_squared(base)));
    const auto other = random_amps(n, 100);
    const Amp s = kernels::serial::inner_product(base, other);
    const Amp p = kernels::parallel::inner_product(base, other);
    CHECK(std::abs(s - p) < 1e-12);
}

TEST_CASE("block reductions are reproducible run to run") {
    const auto base = random_amps(14, 5);
    const auto p = pauli_mask("XZIIYIIIZIIIXI");
    const double first = kernels::parallel::pauli_expectation(base, p);
    for (int i = 0; i < 5; ++i) CHECK(kernels::parallel::pauli_expectation(base, p) == first);
}
