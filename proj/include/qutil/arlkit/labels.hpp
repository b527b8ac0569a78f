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

#include <string_view>

#include "qutil/arlkit/scaling_expr.hpp"

namespace qutil::arl {

enum class Compilability { Native, NonNative1q2q, MultiQubit, ClassicalControl };
enum class Connectivity { Linear, Circular, NearestNeighbor, AllToAll };
enum class Robustness { NoiseResource, Variational, NonVariational };
enum class Parallelizability { QubitBased, CircuitBased, ShotBased };

/// Machine tokens ("non_native_1q2q", "all_to_all", ...) used in JSON.
std::string_view token(Compilability v);
std::string_view token(Connectivity v);
std::string_view token(Robustness v);
std::string_view token(Parallelizability v);

/// Human-readable cell text as it appears in survey tables ("non-native
/// gates", "all-to-all", ...).
std::string_view display(Compilability v);
std::string_view display(Connectivity v);
std::string_view display(Robustness v);
std::string_view display(Parallelizability v);

/// Accept either the token or the display text.
Compilability parse_compilability(std::string_view s);
Connectivity parse_connectivity(std::string_view s);
Robustness parse_robustness(std::string_view s);
Parallelizability parse_parallelizability(std::string_view s);

/// The three scalability columns plus the four categorical labels.
struct ExtendedLabels {
    ScalingExpr circuits;
    ScalingExpr depth;
    ScalingExpr shots;
    Compilability compilability = Compilability::Native;
    Connectivity connectivity = Connectivity::Linear;
    Robustness robustness = Robustness::Variational;
    Parallelizability parallelizability = Parallelizability::CircuitBased;
};

}  // namespace qutil::arl
