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

#include "qutil/profiler/table_check.hpp"

#include <array>

#include "qutil/error.hpp"

namespace qutil::prof {

namespace {

struct Defaults {
    std::string_view app;
    std::array<std::string_view, 3> variables;  // circuits, depth, shots
};

constexpr std::array<Defaults, 6> kImplemented = {{
    {"vqe", {"N", "N", "N"}},
    {"varqite", {"t", "q", "q"}},
    {"qk", {"|T|", "N", "N"}},
    {"qvc", {"|T|", "N", "N"}},
    {"re-uploading", {"|T|", "L", "L"}},
    {"qcbm", {"N", "N", "N"}},
}};

constexpr std::array<std::string_view, 3> kColumns = {"circuits", "depth", "shots"};

std::size_t column_index(std::string_view column) {
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
        if (kColumns[i] == column) return i;
    }
    throw InvalidInput("unknown scaling column '" + std::string(column) + "'");
}

const Defaults& implemented(std::string_view app) {
    for (const auto& d : kImplemented) {
        if (d.app == app) return d;
    }
    arl::survey_row(app);  // throws for ids outside the survey
    throw InvalidInput("application '" + std::string(app) + "' has no runnable implementation");
}

}  // namespace

bool is_implemented_app(std::string_view app_id) {
    for (const auto& d : kImplemented) {
        if (d.app == app_id) return true;
    }
    return false;
}

std::string default_variable(std::string_view app_id, std::string_view column) {
    return std::string(implemented(app_id).variables[column_index(column)]);
}

arl::MeasuredRow verify_table_row(std::string_view app_id, const std::map<std::string, ScalingFit>& fits) {
    const Defaults& d = implemented(app_id);
    for (const auto& [column, _] : fits) column_index(column);
    const auto& labels = arl::survey_row(app_id).labels;
    const std::array<const arl::ScalingExpr*, 3> exprs = {&labels.circuits, &labels.depth, &labels.shots};

    arl::MeasuredRow row{std::string(app_id), {}};
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
        arl::MeasuredCell cell;
        cell.column = std::string(kColumns[i]);
        cell.expression = exprs[i]->text();
        const auto it = fits.find(cell.column);
        if (it == fits.end()) {
            cell.variable = std::string(d.variables[i]);
            cell.expected = exprs[i]->growth_in(cell.variable);
            cell.status = arl::CellStatus::NotMeasured;
        } else {
            const ScalingFit& fit = it->second;
            cell.variable = fit.variable;
            cell.expected = exprs[i]->growth_in(fit.variable);
            cell.measured = fit.best_class;
            cell.r_squared = fit.best_r_squared;
            for (const auto& s : fit.samples) cell.samples.emplace_back(s.size, s.count);
            cell.status = *cell.measured == cell.expected ? arl::CellStatus::Match : arl::CellStatus::Mismatch;
        }
        row.cells.push_back(std::move(cell));
    }
    return row;
}

}  // namespace qutil::prof
