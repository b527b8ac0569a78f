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
#include <mutex>
#include <string>
#include <vector>

namespace qutil::prof {

enum class EventKind { RunStarted, RunFinished, CircuitsExecuted, ShotsConsumed, CompiledStats };

/// One instrumentation record. `size` is the problem size the run was
/// launched at; `count` is the number of circuits or shots; `depth` the
/// native depth of the circuits (CircuitsExecuted) or of the compiled
/// circuit (CompiledStats).
struct Event {
    EventKind kind = EventKind::RunStarted;
    std::string run_id;
    std::size_t size = 0;
    std::uint64_t count = 0;
    std::size_t depth = 0;
    std::size_t two_qubit = 0;
    std::size_t swaps = 0;
    double seconds = 0.0;
};

/// Thread-safe append-only event sink shared by concurrently running jobs.
class EventLog {
  public:
    void record(Event e);
    std::vector<Event> snapshot() const;
    std::size_t size() const;

  private:
    mutable std::mutex mu_;
    std::vector<Event> events_;
};

/// Emits the events of one run into an optional log. All methods are no-ops
/// when the log is null.
class RunRecorder {
  public:
    RunRecorder(EventLog* log, std::string run_id, std::size_t size);

    void circuits(std::uint64_t count, std::size_t depth);
    void shots(std::uint64_t count);
    void compiled(std::size_t depth, std::size_t two_qubit, std::size_t swaps);
    void finish(double seconds);

    const std::string& run_id() const { return run_id_; }

  private:
    EventLog* log_;
    std::string run_id_;
    std::size_t size_;
};

}  // namespace qutil::prof
