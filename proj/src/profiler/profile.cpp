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

#include "qutil/profiler/profile.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qutil/error.hpp"

namespace qutil::prof {

SizeResources& SizeResources::operator+=(const SizeResources& o) {
    circuits += o.circuits;
    shots += o.shots;
    max_depth = std::max(max_depth, o.max_depth);
    sum_depth += o.sum_depth;
    return *this;
}

ResourceProfile& ResourceProfile::operator+=(const ResourceProfile& o) {
    runs += o.runs;
    circuits_executed += o.circuits_executed;
    total_shots += o.total_shots;
    max_native_depth = std::max(max_native_depth, o.max_native_depth);
    sum_native_depth += o.sum_native_depth;
    max_compiled_depth = std::max(max_compiled_depth, o.max_compiled_depth);
    swaps_inserted += o.swaps_inserted;
    wall_runtime_seconds += o.wall_runtime_seconds;
    for (const auto& [size, r] : o.per_size) per_size[size] += r;
    return *this;
}

bool ResourceProfile::same_counts(const ResourceProfile& o) const {
    ResourceProfile a = *this, b = o;
    a.wall_runtime_seconds = b.wall_runtime_seconds = 0.0;
    return a.runs == b.runs && a.circuits_executed == b.circuits_executed && a.total_shots == b.total_shots &&
           a.max_native_depth == b.max_native_depth && a.sum_native_depth == b.sum_native_depth &&
           a.max_compiled_depth == b.max_compiled_depth && a.swaps_inserted == b.swaps_inserted &&
           a.per_size == b.per_size;
}

ResourceProfile profile(std::span<const Event> events) {
    std::multiset<std::string> started, finished;
    for (const auto& e : events) {
        if (e.kind == EventKind::RunStarted) started.insert(e.run_id);
        if (e.kind == EventKind::RunFinished) finished.insert(e.run_id);
    }
    for (const auto& id : started) {
        if (started.count(id) != 1) throw IncompleteProfile("run '" + id + "' started more than once");
        if (finished.count(id) != 1) throw IncompleteProfile("run '" + id + "' has no single RunFinished event");
    }
    ResourceProfile p;
    for (const auto& e : events) {
        if (!started.contains(e.run_id)) throw IncompleteProfile("event for run '" + e.run_id + "' without RunStarted");
        auto& s = p.per_size[e.size];
        switch (e.kind) {
            case EventKind::RunStarted: ++p.runs; break;
            case EventKind::RunFinished: p.wall_runtime_seconds += e.seconds; break;
            case EventKind::CircuitsExecuted:
                p.circuits_executed += e.count;
                p.max_native_depth = std::max(p.max_native_depth, e.depth);
                p.sum_native_depth += e.count * e.depth;
                s += {e.count, 0, e.depth, e.count * e.depth};
                break;
            case EventKind::ShotsConsumed:
                p.total_shots += e.count;
                s.shots += e.count;
                break;
            case EventKind::CompiledStats:
                p.max_compiled_depth = std::max(p.max_compiled_depth, e.depth);
                p.swaps_inserted += e.swaps;
                break;
        }
    }
    return p;
}

ResourceProfile profile(const EventLog& log) {
    const auto events = log.snapshot();
    return profile(std::span<const Event>(events));
}

nlohmann::json to_json(const ResourceProfile& p) {
    nlohmann::json sizes = nlohmann::json::object();
    for (const auto& [n, r] : p.per_size) {
        sizes[std::to_string(n)] = {{"circuits", r.circuits},
                                    {"shots", r.shots},
                                    {"max_depth", r.max_depth},
                                    {"sum_depth", r.sum_depth}};
    }
    return {{"runs", p.runs},
            {"circuits_executed", p.circuits_executed},
            {"total_shots", p.total_shots},
            {"max_native_depth", p.max_native_depth},
            {"sum_native_depth", p.sum_native_depth},
            {"max_compiled_depth", p.max_compiled_depth},
            {"swaps_inserted", p.swaps_inserted},
            {"wall_runtime_seconds", p.wall_runtime_seconds},
            {"per_size", sizes}};
}

}  // namespace qutil::prof
