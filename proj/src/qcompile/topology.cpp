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

#include "qutil/qcompile/topology.hpp"

#include <deque>
#include <limits>

#include "qutil/error.hpp"

namespace qutil::compile {

std::string_view to_string(TopologyKind kind) {
    switch (kind) {
        case TopologyKind::Linear: return "linear";
        case TopologyKind::Circular: return "circular";
        case TopologyKind::GridNN: return "grid_nn";
        case TopologyKind::AllToAll: return "all_to_all";
    }
    return "?";
}

TopologyKind parse_topology_kind(std::string_view name) {
    if (name == "linear") return TopologyKind::Linear;
    if (name == "circular") return TopologyKind::Circular;
    if (name == "grid_nn" || name == "grid") return TopologyKind::GridNN;
    if (name == "all_to_all" || name == "all-to-all") return TopologyKind::AllToAll;
    throw InvalidInput("unknown topology '" + std::string(name) + "'");
}

Topology::Topology(TopologyKind kind, std::size_t num_qubits) : kind_(kind), num_qubits_(num_qubits) {
    if (num_qubits == 0) throw InvalidInput("topology needs at least one qubit");
    if (kind == TopologyKind::GridNN) {
        cols_ = 1;
        while (cols_ * cols_ < num_qubits) ++cols_;  // ceil(sqrt(N))
    }
}

bool Topology::adjacent(std::size_t a, std::size_t b) const {
    if (a >= num_qubits_ || b >= num_qubits_ || a == b) return false;
    const std::size_t lo = std::min(a, b), hi = std::max(a, b);
    switch (kind_) {
        case TopologyKind::Linear: return hi - lo == 1;
        case TopologyKind::Circular: return hi - lo == 1 || (num_qubits_ > 2 && lo == 0 && hi == num_qubits_ - 1);
        case TopologyKind::GridNN: {
            const std::size_t ra = a / cols_, ca = a % cols_, rb = b / cols_, cb = b % cols_;
            return (ra == rb && (ca > cb ? ca - cb : cb - ca) == 1) || (ca == cb && (ra > rb ? ra - rb : rb - ra) == 1);
        }
        case TopologyKind::AllToAll: return true;
    }
    return false;
}

std::vector<std::size_t> Topology::neighbors(std::size_t q) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < num_qubits_; ++j) {
        if (adjacent(q, j)) out.push_back(j);
    }
    return out;
}

std::vector<std::size_t> Topology::shortest_path(std::size_t from, std::size_t to) const {
    if (from >= num_qubits_ || to >= num_qubits_) throw IndexError("shortest_path: qubit out of range");
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent(num_qubits_, kNone);
    std::deque<std::size_t> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (std::size_t v : neighbors(u)) {
            if (parent[v] == kNone) {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    if (parent[to] == kNone) throw InvalidInput("topology is disconnected");
    std::vector<std::size_t> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    return {path.rbegin(), path.rend()};
}

}  // namespace qutil::compile
