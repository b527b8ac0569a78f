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

#include "qutil/simcore/circuit_json.hpp"

#include <fstream>

#include "qutil/error.hpp"

namespace qutil::sim {

using nlohmann::json;

json to_json(const Circuit& circuit) {
    json gates = json::array();
    for (const Gate& g : circuit.gates()) {
        json jg = {{"kind", to_string(g.kind)}, {"targets", g.targets}};
        if (g.angle) jg["angle"] = *g.angle;
        if (g.param_slot) jg["param_slot"] = *g.param_slot;
        gates.push_back(std::move(jg));
    }
    return {{"num_qubits", circuit.num_qubits()}, {"num_params", circuit.num_params()}, {"gates", gates}};
}

Circuit circuit_from_json(const json& j) {
    try {
        if (!j.is_object()) throw InvalidInput("circuit JSON must be an object");
        const auto nq = j.at("num_qubits").get<std::int64_t>();
        const auto np = j.value("num_params", std::int64_t{0});
        if (nq < 1) throw InvalidInput("num_qubits must be >= 1");
        if (np < 0) throw InvalidInput("num_params must be >= 0");
        Circuit c(static_cast<std::size_t>(nq), static_cast<std::size_t>(np));
        for (const auto& jg : j.at("gates")) {
            Gate g;
            g.kind = parse_gate_kind(jg.at("kind").get<std::string>());
            for (const auto& t : jg.at("targets")) {
                const auto q = t.get<std::int64_t>();
                if (q < 0) throw IndexError("negative qubit index in circuit JSON");
                g.targets.push_back(static_cast<std::size_t>(q));
            }
            if (jg.contains("angle") && !jg["angle"].is_null()) g.angle = jg["angle"].get<double>();
            if (jg.contains("param_slot") && !jg["param_slot"].is_null()) {
                const auto slot = jg["param_slot"].get<std::int64_t>();
                if (slot < 0) throw IndexError("negative param_slot in circuit JSON");
                g.param_slot = static_cast<std::size_t>(slot);
            }
            c.add(std::move(g));
        }
        return c;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed circuit JSON: ") + e.what());
    }
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open circuit file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidInput("cannot parse " + path + ": " + e.what());
    }
    return circuit_from_json(j);
}

}  // namespace qutil::sim
