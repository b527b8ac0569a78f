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
#include <json.hpp>
#include <map>
#include <span>

#include "qutil/profiler/events.hpp"

namespace qutil::prof {

/// Counts attributed to one problem size.
struct SizeResources {
    std::uint64_t circuits = 0;
    std::uint64_t shots = 0;
    std::size_t max_depth = 0;
    std::uint64_t sum_depth = 0;  // sum over executed circuits of their depth

    SizeResources& operator+=(const SizeResources& o);
    friend bool operator==(const SizeResources&, const SizeResources&) = default;
};

/// Aggregate of instrumentation events. Every field except the runtime is a
/// sum or a max, so aggregation is order independent and profiles of
/// disjoint runs add componentwise.
struct ResourceProfile {
    std::uint64_t runs = 0;
    std::uint64_t circuits_executed = 0;
    std::uint64_t total_shots = 0;
    std::size_t max_native_depth = 0;
    std::uint64_t sum_native_depth = 0;
    std::size_t max_compiled_depth = 0;
    std::uint64_t swaps_inserted = 0;
    double wall_runtime_seconds = 0.0;  // summed over runs
    std::map<std::size_t, SizeResources> per_size;

    ResourceProfile& operator+=(const ResourceProfile& o);
    friend ResourceProfile operator+(ResourceProfile a, const ResourceProfile& b) { return a += b; }

    /// Equality of every field except the runtime.
    bool same_counts(const ResourceProfile& o) const;
};

/// Aggregates a set of events. Every run id must have exactly one
/// RunStarted and one RunFinished event, and every other event must belong
/// to a started run; otherwise IncompleteProfile is thrown.
ResourceProfile profile(std::span<const Event> events);
ResourceProfile profile(const EventLog& log);

/// Runtime lives under "wall_runtime_seconds"; every other key is a count.
nlohmann::json to_json(const ResourceProfile& p);

}  // namespace qutil::prof
