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

#include "qutil/arlkit/report.hpp"

#include <cstdio>
#include <sstream>

#include "qutil/error.hpp"

namespace qutil::arl {

namespace {

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string md_cell(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::vector<std::string> cells_of(const ArlAssessment& a) {
    return {a.name,
            std::string(to_string(a.level)),
            a.labels.circuits.text(),
            a.labels.depth.text(),
            a.labels.shots.text(),
            std::string(display(a.labels.compilability)),
            std::string(display(a.labels.connectivity)),
            std::string(display(a.labels.robustness)),
            std::string(display(a.labels.parallelizability))};
}

const std::vector<std::string> kHeader = {"Application",   "ARL",          "#Circuits",  "Depth",
                                          "#Shots",        "Compilability", "Connectivity", "Robustness",
                                          "Parallelizability"};

CellStatus parse_status(std::string_view s) {
    if (s == "MATCH") return CellStatus::Match;
    if (s == "MISMATCH") return CellStatus::Mismatch;
    if (s == "NOT-MEASURED") return CellStatus::NotMeasured;
    throw InvalidInput("unknown cell status '" + std::string(s) + "'");
}

}  // namespace

std::string_view to_string(CellStatus s) {
    switch (s) {
        case CellStatus::Match: return "MATCH";
        case CellStatus::Mismatch: return "MISMATCH";
        case CellStatus::NotMeasured: break;
    }
    return "NOT-MEASURED";
}

nlohmann::json to_json(const MeasuredRow& row) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : row.cells) {
        nlohmann::json samples = nlohmann::json::array();
        for (const auto& [x, y] : c.samples) samples.push_back({x, y});
        cells.push_back({{"column", c.column},
                         {"variable", c.variable},
                         {"expression", c.expression},
                         {"expected", to_string(c.expected)},
                         {"measured", c.measured ? nlohmann::json(to_string(*c.measured)) : nlohmann::json(nullptr)},
                         {"r_squared", c.r_squared},
                         {"samples", samples},
                         {"status", to_string(c.status)}});
    }
    return {{"app", row.app_id}, {"cells", cells}};
}

MeasuredRow measured_row_from_json(const nlohmann::json& j) {
    try {
        MeasuredRow row{j.at("app").get<std::string>(), {}};
        for (const auto& c : j.at("cells")) {
            MeasuredCell cell;
            cell.column = c.at("column").get<std::string>();
            cell.variable = c.at("variable").get<std::string>();
            cell.expression = c.at("expression").get<std::string>();
            cell.expected = parse_growth(c.at("expected").get<std::string>());
            if (!c.at("measured").is_null()) cell.measured = parse_growth(c.at("measured").get<std::string>());
            cell.r_squared = c.value("r_squared", 0.0);
            for (const auto& s : c.value("samples", nlohmann::json::array())) {
                cell.samples.emplace_back(s.at(0).get<double>(), s.at(1).get<double>());
            }
            cell.status = parse_status(c.at("status").get<std::string>());
            row.cells.push_back(std::move(cell));
        }
        return row;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed measured row: ") + e.what());
    }
}

std::string render_csv(const std::vector<ArlAssessment>& rows) {
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
        out << '\n';
    };
    line(kHeader);
    for (const auto& r : rows) line(cells_of(r));
    return out.str();
}

std::string render_measured_csv(const std::vector<MeasuredRow>& measured) {
    std::ostringstream out;
    out << "app,column,variable,expression,expected,measured,r_squared,status\n";
    for (const auto& row : measured) {
        for (const auto& c : row.cells) {
            out << csv_field(row.app_id) << ',' << c.column << ',' << csv_field(c.variable) << ','
                << csv_field(c.expression) << ',' << to_string(c.expected) << ','
                << (c.measured ? to_string(*c.measured) : "") << ',' << (c.measured ? fixed(c.r_squared, 6) : "")
                << ',' << to_string(c.status) << '\n';
        }
    }
    return out.str();
}

std::string render_markdown(const std::vector<ArlAssessment>& rows, const std::vector<MeasuredRow>& measured) {
    std::ostringstream out;
    out << "# Application readiness survey\n\n";
    auto line = [&](const std::vector<std::string>& cells) {
        out << '|';
        for (const auto& c : cells) out << ' ' << md_cell(c) << " |";
        out << '\n';
    };
    line(kHeader);
    out << '|';
    for (std::size_t i = 0; i < kHeader.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& r : rows) line(cells_of(r));

    bool any_gap = false;
    for (const auto& r : rows) any_gap = any_gap || !r.gaps.empty();
    if (any_gap) {
        out << "\n## Evidence gaps\n\n";
        for (const auto& r : rows) {
            for (const auto& g : r.gaps) out << "- " << r.name << ": " << g << '\n';
        }
    }

    if (!measured.empty()) {
        out << "\n## Tabulated vs measured scaling\n\n";
        line({"Application", "Column", "Variable", "Tabulated", "Expected class", "Measured class", "R^2", "Samples",
              "Status"});
        out << "|---|---|---|---|---|---|---|---|---|\n";
        for (const auto& row : measured) {
            for (const auto& c : row.cells) {
                std::string samples;
                for (const auto& [x, y] : c.samples) {
                    if (!samples.empty()) samples += ", ";
                    samples += "(" + fixed(x, 0) + ", " + fixed(y, 0) + ")";
                }
                line({row.app_id, c.column, c.variable, c.expression, to_string(c.expected),
                      c.measured ? to_string(*c.measured) : "-", c.measured ? fixed(c.r_squared, 4) : "-", samples,
                      std::string(to_string(c.status))});
            }
        }
    }

    out << "\n## Legend\n\n";
    for (const auto& [sym, meaning] : scaling_legend()) out << "- `" << sym << "`: " << meaning << '\n';
    out << "\nLevels follow the sequential milestones concept, proof of concept, extrapolated advantage, "
           "ideal simulation (4a), noisy simulation (4b) and hardware (5). Exit strategies between levels are "
           "not modeled.\n";
    return out.str();
}

nlohmann::json render_json(const std::vector<ArlAssessment>& rows, const std::vector<MeasuredRow>& measured) {
    nlohmann::json apps = nlohmann::json::array();
    for (const auto& r : rows) {
        apps.push_back({
            {"id", r.id},
            {"name", r.name},
            {"field", r.field},
            {"arl", std::string(to_string(r.level))},
            {"circuits", r.labels.circuits.text()},
            {"depth", r.labels.depth.text()},
            {"shots", r.labels.shots.text()},
            {"compilability", std::string(token(r.labels.compilability))},
            {"connectivity", std::string(token(r.labels.connectivity))},
            {"robustness", std::string(token(r.labels.robustness))},
            {"parallelizability", std::string(token(r.labels.parallelizability))},
            {"evidence",
             {{"concept", r.evidence.has_concept},
              {"poc", r.evidence.poc_benefit_vs_scaled_classical},
              {"extrapolation", r.evidence.extrapolation_shows_advantage},
              {"ideal_sim", r.evidence.ideal_sim_utility},
              {"noisy_sim", r.evidence.noisy_sim_utility},
              {"hardware", r.evidence.hardware_utility},
              {"citations", r.evidence.citations}}},
            {"gaps", r.gaps},
        });
    }
    nlohmann::json m = nlohmann::json::array();
    for (const auto& row : measured) m.push_back(to_json(row));
    return {{"applications", apps}, {"measured", m}};
}

}  // namespace qutil::arl
