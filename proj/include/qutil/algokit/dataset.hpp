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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qutil::algo {

/// Feature vectors with integer labels (+-1 for binary tasks).
struct LabeledDataset {
    std::vector<std::vector<double>> features;
    std::vector<int> labels;

    std::size_t size() const { return features.size(); }
    std::size_t dimension() const { return features.empty() ? 0 : features.front().size(); }

    /// Uniform dimension, matching label count, non-empty. With
    /// `require_binary`, labels must be +-1 (both classes need not occur).
    void validate(bool require_binary) const;
};

/// CSV with a header row; the column named "label" holds labels and every
/// other column is a feature.
LabeledDataset load_dataset_csv(const std::string& path);
void save_dataset_csv(const LabeledDataset& data, const std::string& path);

/// Points uniform in [-1, 1]^2; label +1 inside `radius`, -1 outside.
LabeledDataset make_circles(std::size_t count, double radius, std::uint64_t seed);

/// Two well-separated clusters centred at +-0.6 (every coordinate) with
/// uniform jitter of half-width 0.3; label = sign of the centre.
LabeledDataset make_blobs(std::size_t count, std::size_t dimension, std::uint64_t seed);

/// Features uniform in [-pi, pi), labels uniform in {-1, +1}.
LabeledDataset make_random(std::size_t count, std::size_t dimension, std::uint64_t seed);

}  // namespace qutil::algo
