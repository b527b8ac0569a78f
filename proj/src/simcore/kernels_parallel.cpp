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

#include <algorithm>
#include <bit>
#include <utility>
#include <vector>

#include "qutil/simcore/kernels.hpp"

namespace qutil::sim::kernels::parallel {

namespace {

using Index = std::int64_t;

constexpr std::uint64_t bit(std::size_t q) { return std::uint64_t{1} << q; }

/// Inserts a zero bit at position `pos` of `k`.
constexpr std::uint64_t insert_zero(std::uint64_t k, std::size_t pos) {
    const std::uint64_t low = k & (bit(pos) - 1);
    return ((k >> pos) << (pos + 1)) | low;
}

bool wide(std::size_t dim) { return dim >= (std::size_t{1} << kParallelMinQubits); }

Amp pauli_phase(std::uint64_t index, const PauliMask& p) {
    static constexpr Amp kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Amp phase = kIPow[p.num_y & 3U];
    if (std::popcount(index & p.z_mask) & 1) phase = -phase;
    return phase;
}

template <typename BlockFn>
auto block_reduce(std::size_t dim, BlockFn&& fn) {
    using T = decltype(fn(std::uint64_t{0}, std::uint64_t{0}));
    const Index blocks = static_cast<Index>((dim + kReductionBlock - 1) / kReductionBlock);
    std::vector<T> partial(static_cast<std::size_t>(blocks), T{});
#pragma omp parallel for schedule(static) if (wide(dim))
    for (Index b = 0; b < blocks; ++b) {
        const std::uint64_t lo = static_cast<std::uint64_t>(b) * kReductionBlock;
        const std::uint64_t hi = std::min<std::uint64_t>(lo + kReductionBlock, dim);
        partial[static_cast<std::size_t>(b)] = fn(lo, hi);
    }
    T total{};
    for (const T& v : partial) total += v;
    return total;
}

}  // namespace

void apply_1q(std::span<Amp> amps, std::size_t target, const Mat2& m) {
    const std::uint64_t mask = bit(target);
    const Index half = static_cast<Index>(amps.size() / 2);
    Amp* data = amps.data();
#pragma omp parallel for schedule(static) if (wide(amps.size()))
    for (Index k = 0; k < half; ++k) {
        const std::uint64_t i0 = insert_zero(static_cast<std::uint64_t>(k), target);
        const std::uint64_t i1 = i0 | mask;
        const Amp a0 = data[i0];
        const Amp a1 = data[i1];
        data[i0] = m[0] * a0 + m[1] * a1;
        data[i1] = m[2] * a0 + m[3] * a1;
    }
}

void apply_cz(std::span<Amp> amps, std::size_t a, std::size_t b) {
    const std::size_t lo = std::min(a, b);
    const std::size_t hi = std::max(a, b);
    const std::uint64_t both = bit(a) | bit(b);
    const Index quarter = static_cast<Index>(amps.size() / 4);
    Amp* data = amps.data();
#pragma omp parallel for schedule(static) if (wide(amps.size()))
    for (Index k = 0; k < quarter; ++k) {
        const std::uint64_t i = insert_zero(insert_zero(static_cast<std::uint64_t>(k), lo), hi) | both;
        data[i] = -data[i];
    }
}

void apply_cnot(std::span<Amp> amps, std::size_t control, std::size_t target) {
    const std::size_t lo = std::min(control, target);
    const std::size_t hi = std::max(control, target);
    const std::uint64_t cm = bit(control);
    const std::uint64_t tm = bit(target);
    const Index quarter = static_cast<Index>(amps.size() / 4);
    Amp* data = amps.data();
#pragma omp parallel for schedule(static) if (wide(amps.size()))
    for (Index k = 0; k < quarter; ++k) {
        const std::uint64_t base = insert_zero(insert_zero(static_cast<std::uint64_t>(k), lo), hi);
        std::swap(data[base | cm], data[base | cm | tm]);
    }
}

void apply_swap(std::span<Amp> amps, std::size_t a, std::size_t b) {
    const std::size_t lo = std::min(a, b);
    const std::size_t hi = std::max(a, b);
    const Index quarter = static_cast<Index>(amps.size() / 4);
    Amp* data = amps.data();
#pragma omp parallel for schedule(static) if (wide(amps.size()))
    for (Index k = 0; k < quarter; ++k) {
        const std::uint64_t base = insert_zero(insert_zero(static_cast<std::uint64_t>(k), lo), hi);
        std::swap(data[base | bit(a)], data[base | bit(b)]);
    }
}

void apply_ccnot(std::span<Amp> amps, std::size_t c0, std::size_t c1, std::size_t target) {
    std::array<std::size_t, 3> pos = {c0, c1, target};
    std::sort(pos.begin(), pos.end());
    const std::uint64_t cm = bit(c0) | bit(c1);
    const std::uint64_t tm = bit(target);
    const Index eighth = static_cast<Index>(amps.size() / 8);
    Amp* data = amps.data();
#pragma omp parallel for schedule(static) if (wide(amps.size()))
    for (Index k = 0; k < eighth; ++k) {
        std::uint64_t base = static_cast<std::uint64_t>(k);
        for (std::size_t p : pos) base = insert_zero(base, p);
        std::swap(data[base | cm], data[base | cm | tm]);
    }
}

void apply_pauli(std::span<Amp> amps, const PauliMask& p) {
    Amp* data = amps.data();
    if (p.x_mask == 0) {
        const Index dim = static_cast<Index>(amps.size());
#pragma omp parallel for schedule(static) if (wide(amps.size()))
        for (Index k = 0; k < dim; ++k) {
            data[k] *= pauli_phase(static_cast<std::uint64_t>(k), p);
        }
        return;
    }
    const std::size_t top = static_cast<std::size_t>(std::bit_width(p.x_mask) - 1);
    const Index half = static_cast<Index>(amps.size() / 2);
#pragma omp parallel for schedule(static) if (wide(amps.size()))
    for (Index k = 0; k < half; ++k) {
        const std::uint64_t i = insert_zero(static_cast<std::uint64_t>(k), top);
        const std::uint64_t j = i ^ p.x_mask;
        const Amp ai = data[i];
        const Amp aj = data[j];
        data[j] = pauli_phase(i, p) * ai;
        data[i] = pauli_phase(j, p) * aj;
    }
}

double norm_squared(std::span<const Amp> amps) {
    return block_reduce(amps.size(), [&](std::uint64_t lo, std::uint64_t hi) {
        double s = 0.0;
        for (std::uint64_t i = lo; i < hi; ++i) s += std::norm(amps[i]);
        return s;
    });
}

double pauli_expectation(std::span<const Amp> amps, const PauliMask& p) {
    const Amp total = block_reduce(amps.size(), [&](std::uint64_t lo, std::uint64_t hi) {
        Amp s = 0.0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            s += std::conj(amps[i ^ p.x_mask]) * pauli_phase(i, p) * amps[i];
        }
        return s;
    });
    return total.real();
}

Amp inner_product(std::span<const Amp> bra, std::span<const Amp> ket) {
    return block_reduce(bra.size(), [&](std::uint64_t lo, std::uint64_t hi) {
        Amp s = 0.0;
        for (std::uint64_t i = lo; i < hi; ++i) s += std::conj(bra[i]) * ket[i];
        return s;
    });
}

}  // namespace qutil::sim::kernels::parallel
