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

#include "qutil/arlkit/labels.hpp"

#include <array>
#include <string>
#include <utility>

#include "qutil/error.hpp"

namespace qutil::arl {

namespace {

template <class E, std::size_t K>
using Table = std::array<std::tuple<E, std::string_view, std::string_view>, K>;

constexpr Table<Compilability, 4> kCompilability = {{
    {Compilability::Native, "native", "native gates"},
    {Compilability::NonNative1q2q, "non_native_1q2q", "non-native gates"},
    {Compilability::MultiQubit, "multi_qubit", "multi-qubit gates"},
    {Compilability::ClassicalControl, "classical_control", "classical control"},
}};
constexpr Table<Connectivity, 4> kConnectivity = {{
    {Connectivity::Linear, "linear", "linear"},
    {Connectivity::Circular, "circular", "circular"},
    {Connectivity::NearestNeighbor, "nearest_neighbor", "nearest neighbor"},
    {Connectivity::AllToAll, "all_to_all", "all-to-all"},
}};
constexpr Table<Robustness, 3> kRobustness = {{
    {Robustness::NoiseResource, "noise_resource", "noise as a resource"},
    {Robustness::Variational, "variational", "variational"},
    {Robustness::NonVariational, "non_variational", "non-variational"},
}};
constexpr Table<Parallelizability, 3> kParallelizability = {{
    {Parallelizability::QubitBased, "qubit_based", "qubit-based"},
    {Parallelizability::CircuitBased, "circuit_based", "circuit-based"},
    {Parallelizability::ShotBased, "shot_based", "shot-based"},
}};

template <class E, std::size_t K>
std::string_view lookup(const Table<E, K>& t, E v, bool human) {
    for (const auto& [e, tok, disp] : t) {
        if (e == v) return human ? disp : tok;
    }
    return "?";
}

template <class E, std::size_t K>
E parse(const Table<E, K>& t, std::string_view s, const char* what) {
    for (const auto& [e, tok, disp] : t) {
        if (s == tok || s == disp) return e;
    }
    throw InvalidInput(std::string("unknown ") + what + " label '" + std::string(s) + "'");
}

}  // namespace

std::string_view token(Compilability v) { return lookup(kCompilability, v, false); }
std::string_view token(Connectivity v) { return lookup(kConnectivity, v, false); }
std::string_view token(Robustness v) { return lookup(kRobustness, v, false); }
std::string_view token(Parallelizability v) { return lookup(kParallelizability, v, false); }

std::string_view display(Compilability v) { return lookup(kCompilability, v, true); }
std::string_view display(Connectivity v) { return lookup(kConnectivity, v, true); }
std::string_view display(Robustness v) { return lookup(kRobustness, v, true); }
std::string_view display(Parallelizability v) { return lookup(kParallelizability, v, true); }

Compilability parse_compilability(std::string_view s) { return parse(kCompilability, s, "compilability"); }
Connectivity parse_connectivity(std::string_view s) { return parse(kConnectivity, s, "connectivity"); }
Robustness parse_robustness(std::string_view s) { return parse(kRobustness, s, "robustness"); }
Parallelizability parse_parallelizability(std::string_view s) {
    return parse(kParallelizability, s, "parallelizability");
}

}  // namespace qutil::arl
