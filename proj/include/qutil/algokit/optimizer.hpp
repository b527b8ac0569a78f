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
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "qutil/algokit/trace.hpp"

namespace qutil::algo {

enum class OptimizerKind { CoordinateDescent, Spsa };

std::string_view to_string(OptimizerKind kind);
OptimizerKind parse_optimizer_kind(std::string_view name);

/// Defaults are the documented harness hyperparameters.
struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::CoordinateDescent;
    std::size_t max_iterations = 100;  // sweeps (coordinate descent) or steps (SPSA)
    double tolerance = 1e-10;          // stop when a sweep improves by less
    // Coordinate descent, non-sinusoidal fallback: initial step on the
    // parameter-shift partial derivative, halved while it fails to improve.
    double step = 0.5;
    // SPSA gains a_k = a / (k + 1 + A)^alpha, c_k = c / (k + 1)^gamma.
    double spsa_a = 0.2;
    double spsa_c = 0.15;
    double spsa_A = 10.0;
    double spsa_alpha = 0.602;
    double spsa_gamma = 0.101;
};

using Objective = std::function<double(std::span<const double>)>;

/// Uniform draws in [-pi, pi) from Rng(seed).
std::vector<double> initial_parameters(std::size_t count, std::uint64_t seed);

/// Minimises `f` from `x0`.
///
/// Coordinate descent evaluates f at theta_i +- pi/2 (the parameter-shift
/// pair). When `sinusoidal` is set, f is assumed to be a + b cos(theta_i) +
/// c sin(theta_i) in each coordinate and the coordinate is moved to the
/// exact minimiser of that sinusoid; otherwise a backtracking step along the
/// parameter-shift partial derivative is taken. SPSA uses Rademacher
/// perturbations from Rng(seed).
///
/// The trace records the best objective seen after each iteration, so it is
/// non-increasing; final_params are the corresponding parameters.
TrainingTrace minimize(const Objective& f, std::vector<double> x0, const OptimizerConfig& config,
                       std::uint64_t seed, bool sinusoidal);

/// Parameter-shift gradient of a sinusoidal objective: (f(x + pi/2 e_i) -
/// f(x - pi/2 e_i)) / 2 per coordinate.
std::vector<double> parameter_shift_gradient(const Objective& f, std::span<const double> x);

}  // namespace qutil::algo
