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

#include "qutil/profiler/events.hpp"

namespace qutil::algo {

struct TraceEntry {
    double objective = 0.0;
    double param_norm = 0.0;
};

/// Resource totals of one run.
struct Resources {
    std::uint64_t circuits = 0;
    std::uint64_t shots = 0;
    std::uint64_t objective_evaluations = 0;
    std::size_t max_depth = 0;
    std::uint64_t sum_depth = 0;  // sum over executed circuits
};

/// Best-so-far optimisation history. entries.back() describes final_params.
struct TrainingTrace {
    std::vector<TraceEntry> entries;
    std::vector<double> final_params;
    bool converged = false;
    std::vector<std::string> diagnostics;
    Resources resources;

    double final_objective() const { return entries.back().objective; }
};

/// Counts circuits/shots into a trace and forwards them to an optional
/// event log.
class Meter {
  public:
    Meter(Resources& totals, prof::RunRecorder* recorder) : totals_(totals), recorder_(recorder) {}

    void circuits(std::uint64_t count, std::size_t depth, std::uint64_t shots_each = 0) {
        totals_.circuits += count;
        totals_.shots += count * shots_each;
        totals_.sum_depth += count * depth;
        if (depth > totals_.max_depth) totals_.max_depth = depth;
        if (recorder_) {
            recorder_->circuits(count, depth);
            recorder_->shots(count * shots_each);
        }
    }

  private:
    Resources& totals_;
    prof::RunRecorder* recorder_;
};

}  // namespace qutil::algo
