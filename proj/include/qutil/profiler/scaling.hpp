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

#include <json.hpp>
#include <string>
#include <vector>

#include "qutil/arlkit/growth.hpp"

namespace qutil::prof {

struct Sample {
    double size = 0.0;
    double count = 0.0;
};

/// A fitted model in log space. `score` is 1 - sqrt(SS_res / (m - k)) over
/// the ln(count) residuals, for m samples and k fitted coefficients: one
/// minus the degrees-of-freedom corrected relative error.
struct FitCandidate {
    std::string model;  // "constant", "power", "exponential" or "offset_power"
    double r_squared = 0.0;
    double score = 0.0;
    // constant: {ln c}; power: {ln a, exponent}; exponential: {ln a, ln b};
    // offset_power: {c, a, d} of the best-scoring c + a n^d
    std::vector<double> coefficients;
};

struct ScalingFit {
    std::string variable;
    std::vector<Sample> samples;  // sorted by size
    arl::Growth best_class;
    double best_r_squared = 0.0;
    // Score of the degree-d ladder model per d (NaN: infeasible); empty
    // unless the polynomial branch was taken.
    std::vector<double> degree_scores;
    std::vector<FitCandidate> candidates;
};

/// Score margin the exponential model needs over the power law before it
/// is preferred.
inline constexpr double kFitMargin = 0.02;

/// Classifies the growth of `count` in `size`.
///
/// Two-parameter models are fitted by least squares: a power law a n^k
/// (log-log, free exponent), an exponential a b^n (semilog) and offset
/// powers c + a n^d (linear space, integer d = 1..8, a >= 0, scored on
/// ln(count)). A series whose counts agree to 1e-9 relative is constant. The
/// exponential wins when it grows (b > 1) and scores at least kFitMargin
/// above both polynomial models. Otherwise the degree comes from a ladder of
/// linear-space fits: c (degree 0), c + a n (degree 1) and c + b n + a n^d
/// (degree d = 2..8, a >= 0). It starts at 0 and moves to a higher d only
/// when that fit scores kFitMargin above the current choice. The lower-order
/// terms keep affine counts such as N + 7 linear; growth smaller than the
/// margin reads as constant.
///
/// Requires at least 4 distinct positive sizes and positive counts.
ScalingFit fit_scaling(std::vector<Sample> samples, std::string variable = "N");

nlohmann::json to_json(const ScalingFit& fit);

}  // namespace qutil::prof
