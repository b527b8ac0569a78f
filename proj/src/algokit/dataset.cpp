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

#include "qutil/algokit/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qutil/error.hpp"
#include "qutil/simcore/rng.hpp"

namespace qutil::algo {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return cells;
}

double parse_number(const std::string& s, const std::string& where) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidInput("non-numeric value '" + s + "' " + where);
    return v;
}

}  // namespace

void LabeledDataset::validate(bool require_binary) const {
    if (features.empty()) throw InvalidInput("dataset is empty");
    if (labels.size() != features.size()) throw InvalidInput("label count differs from point count");
    const std::size_t d = dimension();
    if (d == 0) throw InvalidInput("dataset has no features");
    for (const auto& f : features) {
        if (f.size() != d) throw InvalidInput("points have differing feature dimensions");
    }
    if (require_binary) {
        for (int y : labels) {
            if (y != 1 && y != -1) throw InvalidInput("labels must be +1 or -1, got " + std::to_string(y));
        }
    }
}

LabeledDataset load_dataset_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open dataset " + path);
    std::string line;
    if (!std::getline(in, line)) throw InvalidInput("dataset " + path + " has no header");
    const auto header = split(line);
    std::size_t label_col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "label") label_col = i;
    }
    if (label_col == header.size()) throw InvalidInput("dataset " + path + " has no 'label' column");
    LabeledDataset data;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto cells = split(line);
        const std::string where = "in " + path + " row " + std::to_string(row);
        if (cells.size() != header.size()) throw InvalidInput("wrong column count " + where);
        std::vector<double> f;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i == label_col) {
                const double y = parse_number(cells[i], where);
                if (y != std::floor(y)) throw InvalidInput("non-integer label " + where);
                data.labels.push_back(static_cast<int>(y));
            } else {
                f.push_back(parse_number(cells[i], where));
            }
        }
        data.features.push_back(std::move(f));
    }
    data.validate(false);
    return data;
}

void save_dataset_csv(const LabeledDataset& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    for (std::size_t i = 0; i < data.dimension(); ++i) out << 'x' << i << ',';
    out << "label\n";
    out.precision(17);
    for (std::size_t k = 0; k < data.size(); ++k) {
        for (double v : data.features[k]) out << v << ',';
        out << data.labels[k] << '\n';
    }
}

LabeledDataset make_circles(std::size_t count, double radius, std::uint64_t seed) {
    sim::Rng rng(seed);
    LabeledDataset d;
    for (std::size_t i = 0; i < count; ++i) {
        const double x = rng.uniform(-1, 1), y = rng.uniform(-1, 1);
        d.features.push_back({x, y});
        d.labels.push_back(std::hypot(x, y) < radius ? 1 : -1);
    }
    return d;
}

LabeledDataset make_blobs(std::size_t count, std::size_t dimension, std::uint64_t seed) {
    sim::Rng rng(seed);
    LabeledDataset d;
    for (std::size_t i = 0; i < count; ++i) {
        const int y = (i % 2 == 0) ? 1 : -1;
        std::vector<double> f(dimension);
        for (auto& v : f) v = 0.6 * y + rng.uniform(-0.3, 0.3);
        d.features.push_back(std::move(f));
        d.labels.push_back(y);
    }
    return d;
}

LabeledDataset make_random(std::size_t count, std::size_t dimension, std::uint64_t seed) {
    sim::Rng rng(seed);
    LabeledDataset d;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<double> f(dimension);
        for (auto& v : f) v = rng.uniform(-std::numbers::pi, std::numbers::pi);
        d.features.push_back(std::move(f));
        d.labels.push_back(rng.bernoulli(0.5) ? 1 : -1);
    }
    return d;
}

}  // namespace qutil::algo
