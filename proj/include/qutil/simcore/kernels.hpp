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

#pragma once

// Amplitude-level kernels. Two implementations with identical signatures:
//
//   kernels::parallel  OpenMP data-parallel loops; used by the simulator.
//   kernels::serial    straightforward reference loops, kept for testing and
//                      for the benchmark target.
//
// Basis index bit q holds qubit q (qubit 0 is the least significant bit).
// Reductions in the parallel kernels sum fixed-size blocks and then combine
// the block sums in index order, so results do not depend on thread count.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

namespace qutil::sim::kernels {

using Amp = std::complex<double>;
using Mat2 = std::array<Amp, 4>;  // row-major {m00, m01, m10, m11}

/// X/Z bit masks of a Pauli word P = i^num_y * X^x_mask * Z^z_mask (Y bits are
/// set in both masks).
struct PauliMask {
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;
    unsigned num_y = 0;
};

/// Block length used by the deterministic block reductions.
inline constexpr std::size_t kReductionBlock = std::size_t{1} << 10;

/// Registers below this size run the parallel kernels on one thread.
inline constexpr std::size_t kParallelMinQubits = 12;

#define QUTIL_KERNEL_DECLS                                                                      \
    void apply_1q(std::span<Amp> amps, std::size_t target, const Mat2& m);                      \
    void apply_cz(std::span<Amp> amps, std::size_t a, std::size_t b);                           \
    void apply_cnot(std::span<Amp> amps, std::size_t control, std::size_t target);              \
    void apply_swap(std::span<Amp> amps, std::size_t a, std::size_t b);                         \
    void apply_ccnot(std::span<Amp> amps, std::size_t c0, std::size_t c1, std::size_t target);  \
    void apply_pauli(std::span<Amp> amps, const PauliMask& p);                                  \
    double norm_squared(std::span<const Amp> amps);                                             \
    double pauli_expectation(std::span<const Amp> amps, const PauliMask& p);                    \
    Amp inner_product(std::span<const Amp> bra, std::span<const Amp> ket);

namespace serial {
QUTIL_KERNEL_DECLS
}  // namespace serial

namespace parallel {
QUTIL_KERNEL_DECLS
}  // namespace parallel

#undef QUTIL_KERNEL_DECLS

}  // namespace qutil::sim::kernels
