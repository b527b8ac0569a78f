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

#include <bit>
#include <utility>

#include "qutil/simcore/kernels.hpp"

namespace qutil::sim::kernels::serial {

namespace {

constexpr std::uint64_t bit(std::size_t q) { return std::uint64_t{1} << q; }

Amp pauli_phase(std::uint64_t index, const PauliMask& p) {
    static constexpr Amp kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Amp phase = kIPow[p.num_y & 3U];
    if (std::popcount(index & p.z_mask) & 1) phase = -phase;
    return phase;
}

}  // namespace

void apply_1q(std::span<Amp> amps, std::size_t target, const Mat2& m) {
    const std::uint64_t mask = bit(target);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & mask) continue;
        const Amp a0 = amps[i];
        const Amp a1 = amps[i | mask];
        amps[i] = m[0] * a0 + m[1] * a1;
        amps[i | mask] = m[2] * a0 + m[3] * a1;
    }
}

void apply_cz(std::span<Amp> amps, std::size_t a, std::size_t b) {
    const std::uint64_t both = bit(a) | bit(b);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & both) == both) amps[i] = -amps[i];
    }
}

void apply_cnot(std::span<Amp> amps, std::size_t control, std::size_t target) {
    const std::uint64_t cm = bit(control);
    const std::uint64_t tm = bit(target);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & cm) && !(i & tm)) std::swap(amps[i], amps[i | tm]);
    }
}

void apply_swap(std::span<Amp> amps, std::size_t a, std::size_t b) {
    const std::uint64_t ma = bit(a);
    const std::uint64_t mb = bit(b);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & ma) && !(i & mb)) std::swap(amps[i], amps[i ^ ma ^ mb]);
    }
}

void apply_ccnot(std::span<Amp> amps, std::size_t c0, std::size_t c1, std::size_t target) {
    const std::uint64_t cm = bit(c0) | bit(c1);
    const std::uint64_t tm = bit(target);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & cm) == cm && !(i & tm)) std::swap(amps[i], amps[i | tm]);
    }
}

void apply_pauli(std::span<Amp> amps, const PauliMask& p) {
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const std::uint64_t j = i ^ p.x_mask;
        if (j < i) continue;
        if (j == i) {
            amps[i] *= pauli_phase(i, p);
            continue;
        }
        const Amp ai = amps[i];
        const Amp aj = amps[j];
        amps[j] = pauli_phase(i, p) * ai;
        amps[i] = pauli_phase(j, p) * aj;
    }
}

double norm_squared(std::span<const Amp> amps) {
    double s = 0.0;
    for (const Amp& a : amps) s += std::norm(a);
    return s;
}

double pauli_expectation(std::span<const Amp> amps, const PauliMask& p) {
    Amp s = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        s += std::conj(amps[i ^ p.x_mask]) * pauli_phase(i, p) * amps[i];
    }
    return s.real();
}

Amp inner_product(std::span<const Amp> bra, std::span<const Amp> ket) {
    Amp s = 0.0;
    for (std::size_t i = 0; i < bra.size(); ++i) s += std::conj(bra[i]) * ket[i];
    return s;
}

}  // namespace qutil::sim::kernels::serial
