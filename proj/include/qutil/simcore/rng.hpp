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

#include <cstdint>
#include <random>

namespace qutil::sim {

/// Seedable generator with a fixed, platform-independent bit stream.
///
/// The engine is std::mt19937_64, whose output sequence is pinned by the C++
/// standard. The conversions to doubles and bounded integers are done here
/// rather than through <random> distributions, whose algorithms are
/// implementation-defined:
///   uniform()   = (next() >> 11) * 2^-53, in [0, 1)
///   below(n)    = rejection sampling on the top bits, in [0, n)
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t below(std::uint64_t n);
    bool bernoulli(double p) { return p > 0.0 && uniform() < p; }

  private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finaliser; used to derive independent sub-streams.
std::uint64_t mix64(std::uint64_t x);

/// Seed for sub-stream `index` of `seed` (per-shot / per-worker streams).
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ULL));
}

}  // namespace qutil::sim
