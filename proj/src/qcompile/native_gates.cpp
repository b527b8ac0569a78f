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

#include "qutil/qcompile/native_gates.hpp"

#include <algorithm>
#include <cctype>

#include "qutil/error.hpp"

namespace qutil::compile {

NativeGateSet::NativeGateSet(std::set<GateKind> one_qubit, std::set<GateKind> two_qubit)
    : one_qubit_(std::move(one_qubit)), two_qubit_(std::move(two_qubit)) {
    for (GateKind k : one_qubit_) {
        if (sim::arity(k) != 1) {
            throw InvalidInput(std::string(sim::to_string(k)) + " is not a 1-qubit gate");
        }
    }
    for (GateKind k : two_qubit_) {
        if (k != GateKind::CZ && k != GateKind::CNOT && k != GateKind::SWAP) {
            throw InvalidInput(std::string(sim::to_string(k)) + " cannot be a native 2-qubit gate");
        }
    }
    const int axes = int(one_qubit_.contains(GateKind::RX)) + int(one_qubit_.contains(GateKind::RY)) +
                     int(one_qubit_.contains(GateKind::RZ));
    if (axes < 2) throw InvalidInput("native gate set needs rotations about at least two axes");
    if (!two_qubit_.contains(GateKind::CZ) && !two_qubit_.contains(GateKind::CNOT)) {
        throw InvalidInput("native gate set needs CZ or CNOT as an entangling gate");
    }
}

NativeGateSet NativeGateSet::defaults() {
    return NativeGateSet({GateKind::RX, GateKind::RY, GateKind::RZ}, {GateKind::CZ});
}

NativeGateSet NativeGateSet::parse(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    if (s == "DEFAULT") return defaults();
    std::set<GateKind> one, two;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t end = std::min(s.find(',', start), s.size());
        std::string name = s.substr(start, end - start);
        std::erase_if(name, [](unsigned char c) { return std::isspace(c); });
        if (!name.empty()) {
            const GateKind k = sim::parse_gate_kind(name);
            (sim::arity(k) == 1 ? one : two).insert(k);
        }
        start = end + 1;
    }
    return NativeGateSet(std::move(one), std::move(two));
}

std::string NativeGateSet::to_string() const {
    std::string out;
    for (const auto* set : {&one_qubit_, &two_qubit_}) {
        for (GateKind k : *set) {
            if (!out.empty()) out += ',';
            out += sim::to_string(k);
        }
    }
    return out;
}

}  // namespace qutil::compile
