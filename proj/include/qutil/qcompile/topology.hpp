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
#include <string>
#include <string_view>
#include <vector>

namespace qutil::compile {

enum class TopologyKind { Linear, Circular, GridNN, AllToAll };

std::string_view to_string(TopologyKind kind);
/// Accepts "linear", "circular", "grid_nn" (or "grid"), "all_to_all".
TopologyKind parse_topology_kind(std::string_view name);

/// Physical coupling graph. adjacent() is symmetric and irreflexive.
/// GridNN places sites row-major on a grid with ceil(sqrt(N)) columns.
class Topology {
  public:
    Topology(TopologyKind kind, std::size_t num_qubits);

    TopologyKind kind() const { return kind_; }
    std::size_t num_qubits() const { return num_qubits_; }
    bool adjacent(std::size_t a, std::size_t b) const;
    /// Neighbours of `q` in ascending order.
    std::vector<std::size_t> neighbors(std::size_t q) const;
    /// Shortest path from `from` to `to` inclusive; BFS visiting neighbours in
    /// ascending order, so ties resolve deterministically.
    std::vector<std::size_t> shortest_path(std::size_t from, std::size_t to) const;
    std::size_t grid_columns() const { return cols_; }

  private:
    TopologyKind kind_;
    std::size_t num_qubits_;
    std::size_t cols_ = 0;
};

}  // namespace qutil::compile
