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

#include "qutil/profiler/events.hpp"

namespace qutil::prof {

void EventLog::record(Event e) {
    std::lock_guard lock(mu_);
    events_.push_back(std::move(e));
}

std::vector<Event> EventLog::snapshot() const {
    std::lock_guard lock(mu_);
    return events_;
}

std::size_t EventLog::size() const {
    std::lock_guard lock(mu_);
    return events_.size();
}

RunRecorder::RunRecorder(EventLog* log, std::string run_id, std::size_t size)
    : log_(log), run_id_(std::move(run_id)), size_(size) {
    if (log_) log_->record({.kind = EventKind::RunStarted, .run_id = run_id_, .size = size_});
}

void RunRecorder::circuits(std::uint64_t count, std::size_t depth) {
    if (log_ && count) {
        log_->record({.kind = EventKind::CircuitsExecuted, .run_id = run_id_, .size = size_, .count = count, .depth = depth});
    }
}

void RunRecorder::shots(std::uint64_t count) {
    if (log_ && count) log_->record({.kind = EventKind::ShotsConsumed, .run_id = run_id_, .size = size_, .count = count});
}

void RunRecorder::compiled(std::size_t depth, std::size_t two_qubit, std::size_t swaps) {
    if (log_) {
        log_->record({.kind = EventKind::CompiledStats, .run_id = run_id_, .size = size_, .depth = depth,
                      .two_qubit = two_qubit, .swaps = swaps});
    }
}

void RunRecorder::finish(double seconds) {
    if (log_) log_->record({.kind = EventKind::RunFinished, .run_id = run_id_, .size = size_, .seconds = seconds});
}

}  // namespace qutil::prof
