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

#include <filesystem>
#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace qutil::cli {

/// Writes `content` to a sibling temporary file and renames it over `path`,
/// so readers never observe a partial file.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Pretty-printed JSON with sorted keys and a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

/// True for keys whose values depend on wall-clock time: "runtime" and any
/// key ending in "_seconds".
bool is_runtime_key(const std::string& key);

/// Copy of `j` with every runtime key removed at any depth.
nlohmann::json strip_runtime(const nlohmann::json& j);

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

/// Line chart as a standalone SVG document. With `log_y` the y axis is
/// log10 and non-positive values are dropped.
std::string plot_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                     const std::vector<Series>& series, bool log_y = false);

}  // namespace qutil::cli
