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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qutil/arlkit/assessment.hpp"

namespace qutil::arl {

enum class CellStatus { Match, Mismatch, NotMeasured };

/// "MATCH", "MISMATCH", "NOT-MEASURED".
std::string_view to_string(CellStatus s);

/// One scalability cell compared against a measurement. A mismatch keeps the
/// measured class and samples next to the tabulated expression.
struct MeasuredCell {
    std::string column;      // "circuits", "depth" or "shots"
    std::string variable;    // swept legend symbol
    std::string expression;  // tabulated expression
    Growth expected;         // growth of `expression` in `variable`
    std::optional<Growth> measured;
    double r_squared = 0.0;
    std::vector<std::pair<double, double>> samples;  // (size, count)
    CellStatus status = CellStatus::NotMeasured;
};

struct MeasuredRow {
    std::string app_id;
    std::vector<MeasuredCell> cells;
};

nlohmann::json to_json(const MeasuredRow& row);
MeasuredRow measured_row_from_json(const nlohmann::json& j);

/// Survey table in the column order Application, ARL, #Circuits, Depth,
/// #Shots, Compilability, Connectivity, Robustness, Parallelizability.
std::string render_csv(const std::vector<ArlAssessment>& rows);
std::string render_markdown(const std::vector<ArlAssessment>& rows, const std::vector<MeasuredRow>& measured = {});
nlohmann::json render_json(const std::vector<ArlAssessment>& rows, const std::vector<MeasuredRow>& measured = {});

/// Measured cells only, one line per cell.
std::string render_measured_csv(const std::vector<MeasuredRow>& measured);

}  // namespace qutil::arl
