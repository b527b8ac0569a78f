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

#include "qutil/profiler/mirror.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "qutil/error.hpp"
#include "qutil/simcore/rng.hpp"

namespace qutil::prof {

namespace {

using sim::Gate;
using sim::GateKind;

constexpr std::size_t kMaxMirrorQubits = 12;

struct Frame {
    std::vector<bool> x, z;

    // Does the frame letter on q anticommute with the rotation axis?
    bool anticommutes(std::size_t q, GateKind axis) const {
        switch (axis) {
            case GateKind::RX: return z[q];
            case GateKind::RZ: return x[q];
            default: return x[q] != z[q];  // RY: X or Z letter
        }
    }

    // Replaces the frame P by g^dagger P g for a Clifford g.
    void conjugate(const Gate& g) {
        const auto& t = g.targets;
        switch (g.kind) {
            case GateKind::X:
            case GateKind::Y:
            case GateKind::Z: break;
            case GateKind::H: {
                const bool tmp = x[t[0]];
                x[t[0]] = z[t[0]];
                z[t[0]] = tmp;
                break;
            }
            case GateKind::CNOT:
                x[t[1]] = x[t[1]] != x[t[0]];
                z[t[0]] = z[t[0]] != z[t[1]];
                break;
            case GateKind::CZ:
                z[t[0]] = z[t[0]] != x[t[1]];
                z[t[1]] = z[t[1]] != x[t[0]];
                break;
            case GateKind::SWAP: {
                const bool tx = x[t[0]], tz = z[t[0]];
                x[t[0]] = x[t[1]];
                z[t[0]] = z[t[1]];
                x[t[1]] = tx;
                z[t[1]] = tz;
                break;
            }
            default: throw UnsupportedGate("mirror circuits cannot invert " + std::string(to_string(g.kind)));
        }
    }
};

}  // namespace

MirrorCircuit build_mirror_circuit(const sim::Circuit& c, const std::string& pauli_layer) {
    const std::size_t n = c.num_qubits();
    if (c.num_params() != 0) throw InvalidInput("mirror circuits need a bound circuit");
    if (pauli_layer.size() != n) throw InvalidInput("Pauli layer length differs from the register size");

    MirrorCircuit m{c, pauli_layer, std::string(n, '0')};
    Frame f{std::vector<bool>(n), std::vector<bool>(n)};
    for (std::size_t q = 0; q < n; ++q) {
        const char letter = pauli_layer[n - 1 - q];
        switch (letter) {
            case 'I': break;
            case 'X': m.circuit.x(q); break;
            case 'Y': m.circuit.y(q); break;
            case 'Z': m.circuit.z(q); break;
            default: throw InvalidInput(std::string("bad Pauli letter '") + letter + "'");
        }
        f.x[q] = letter == 'X' || letter == 'Y';
        f.z[q] = letter == 'Z' || letter == 'Y';
    }
    const auto& gates = c.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        if (sim::is_rotation(it->kind)) {
            const double theta = *it->angle;
            const bool flip = f.anticommutes(it->targets[0], it->kind);
            m.circuit.add(Gate::rotation(it->kind, it->targets[0], flip ? theta : -theta));
        } else {
            f.conjugate(*it);  // throws before emitting for non-Clifford gates
            m.circuit.add(*it);
        }
    }
    for (std::size_t q = 0; q < n; ++q) m.expected[n - 1 - q] = f.x[q] ? '1' : '0';
    return m;
}

std::string random_pauli_layer(std::size_t num_qubits, std::uint64_t seed) {
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    sim::Rng rng(seed);
    std::string layer(num_qubits, 'I');
    for (auto& ch : layer) ch = kLetters[rng.below(4)];
    return layer;
}

std::vector<MirrorResult> mirror_benchmark(const CircuitFamily& family, std::span<const std::size_t> sizes,
                                           const sim::NoiseModel& noise, std::uint64_t shots, std::uint64_t seed) {
    noise.validate();
    if (shots == 0) throw InvalidInput("mirror benchmark needs shots >= 1");
    std::vector<MirrorResult> out;
    for (const std::size_t size : sizes) {
        const sim::Circuit c = family(size);
        if (c.num_qubits() == 0 || c.num_qubits() > kMaxMirrorQubits) {
            throw SizeLimitError("mirror benchmark supports 1.." + std::to_string(kMaxMirrorQubits) + " qubits");
        }
        const auto m = build_mirror_circuit(c, random_pauli_layer(c.num_qubits(), sim::substream_seed(seed, size)));
        const auto counts =
            sim::run_noisy(m.circuit, {}, noise, shots, sim::substream_seed(seed, size + (std::uint64_t{1} << 32)));
        MirrorResult r;
        r.size = size;
        r.depth = c.depth();
        r.mirror_depth = m.circuit.depth();
        r.gate_count = m.circuit.size();
        r.pauli_layer = m.pauli_layer;
        r.expected = m.expected;
        r.shots = shots;
        r.success_probability = sim::frequency(counts, m.expected);
        r.standard_error = std::sqrt(r.success_probability * (1 - r.success_probability) / double(shots));
        r.noise = noise;
        out.push_back(std::move(r));
    }
    return out;
}

CircuitFamily hea_family(std::size_t layers, std::uint64_t seed) {
    return [layers, seed](std::size_t n) {
        sim::Circuit c(n);
        sim::Rng rng(sim::substream_seed(seed, n));
        for (std::size_t l = 0; l < layers; ++l) {
            for (std::size_t q = 0; q < n; ++q) {
                c.ry(q, rng.uniform(-std::numbers::pi, std::numbers::pi));
                c.rz(q, rng.uniform(-std::numbers::pi, std::numbers::pi));
            }
            for (std::size_t q = 0; q + 1 < n; ++q) c.cz(q, q + 1);
        }
        return c;
    };
}

nlohmann::json to_json(const MirrorResult& r) {
    return {{"size", r.size},
            {"depth", r.depth},
            {"mirror_depth", r.mirror_depth},
            {"gate_count", r.gate_count},
            {"pauli_layer", r.pauli_layer},
            {"expected", r.expected},
            {"shots", r.shots},
            {"success_probability", r.success_probability},
            {"standard_error", r.standard_error},
            {"noise", {{"p1", r.noise.p1}, {"p2", r.noise.p2}}}};
}

}  // namespace qutil::prof
