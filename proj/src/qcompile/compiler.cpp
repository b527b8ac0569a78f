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

#include "qutil/qcompile/compiler.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>

#include "qutil/error.hpp"
#include "qutil/simcore/simulator.hpp"

namespace qutil::compile {

using sim::Gate;
using Amp = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kElide = 1e-12;

/// Wraps into (-pi, pi].
double normalize_angle(double a) {
    a = std::remainder(a, 2 * kPi);
    if (a <= -kPi) a += 2 * kPi;
    return a;
}

enum Axis { AX = 0, AY = 1, AZ = 2 };

GateKind rotation_kind(int axis) { return axis == AX ? GateKind::RX : axis == AY ? GateKind::RY : GateKind::RZ; }
int axis_of(GateKind k) { return k == GateKind::RX ? AX : k == GateKind::RY ? AY : AZ; }

using M2 = std::array<Amp, 4>;

M2 mul(const M2& a, const M2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}
M2 dagger(const M2& a) { return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}; }

class Lowering {
  public:
    Lowering(const NativeGateSet& natives, Circuit& out) : natives_(natives), out_(out) {
        for (GateKind k : {GateKind::RX, GateKind::RY, GateKind::RZ}) {
            if (natives.one_qubit().contains(k)) axes_[axis_of(k)] = true;
        }
        // Euler pair (outer, middle) and the frame change W with R_outer = W RZ W^dag,
        // R_middle = W RY W^dag.
        if (axes_[AZ] && axes_[AY]) {
            outer_ = AZ, middle_ = AY, w_ = sim::gate_matrix(GateKind::RZ, 0.0);
        } else if (axes_[AZ] && axes_[AX]) {
            outer_ = AZ, middle_ = AX, w_ = sim::gate_matrix(GateKind::RZ, -kPi / 2);
        } else {
            outer_ = AX, middle_ = AY, w_ = sim::gate_matrix(GateKind::RY, kPi / 2);
        }
    }

    void lower(const Gate& g) {
        if (natives_.contains(g.kind)) {
            out_.add(g);
            return;
        }
        const auto& t = g.targets;
        switch (g.kind) {
            case GateKind::CNOT:
                if (natives_.two_qubit().contains(GateKind::CZ)) {
                    lower(Gate::fixed(GateKind::H, {t[1]}));
                    out_.add(Gate::fixed(GateKind::CZ, {t[0], t[1]}));
                    lower(Gate::fixed(GateKind::H, {t[1]}));
                    return;
                }
                break;
            case GateKind::CZ:
                if (natives_.two_qubit().contains(GateKind::CNOT)) {
                    lower(Gate::fixed(GateKind::H, {t[1]}));
                    out_.add(Gate::fixed(GateKind::CNOT, {t[0], t[1]}));
                    lower(Gate::fixed(GateKind::H, {t[1]}));
                    return;
                }
                break;
            case GateKind::SWAP:
                lower(Gate::fixed(GateKind::CNOT, {t[0], t[1]}));
                lower(Gate::fixed(GateKind::CNOT, {t[1], t[0]}));
                lower(Gate::fixed(GateKind::CNOT, {t[0], t[1]}));
                return;
            case GateKind::CCNOT: lower_ccnot(t[0], t[1], t[2]); return;
            default:
                if (g.param_slot) {
                    lower_parametric(g);
                } else {
                    lower_fixed_1q(t[0], sim::gate_matrix(g.kind, g.angle.value_or(0.0)));
                }
                return;
        }
        throw UnsupportedGate("cannot lower " + std::string(sim::to_string(g.kind)) + " to " + natives_.to_string());
    }

  private:
    // Standard Toffoli network: 6 CNOTs, T gates written as RZ(+-pi/4).
    void lower_ccnot(std::size_t a, std::size_t b, std::size_t c) {
        const double t = kPi / 4;
        auto cx = [&](std::size_t x, std::size_t y) { lower(Gate::fixed(GateKind::CNOT, {x, y})); };
        auto rz = [&](std::size_t q, double ang) { lower(Gate::rotation(GateKind::RZ, q, ang)); };
        lower(Gate::fixed(GateKind::H, {c}));
        cx(b, c);
        rz(c, -t);
        cx(a, c);
        rz(c, t);
        cx(b, c);
        rz(c, -t);
        cx(a, c);
        rz(b, t);
        rz(c, t);
        lower(Gate::fixed(GateKind::H, {c}));
        cx(a, b);
        rz(a, t);
        rz(b, -t);
        cx(a, b);
    }

    // R_A(theta) = R_C(s pi/2) R_B(theta) R_C(-s pi/2) as a matrix product, with
    // s = +1 when (C, B, A) is a cyclic permutation of (X, Y, Z).
    void lower_parametric(const Gate& g) {
        const int a = axis_of(g.kind);
        const int c = (a + 1) % 3, b = (a + 2) % 3;  // (C, B, A) = (a+1, a+2, a) is cyclic
        if (!axes_[b] || !axes_[c]) {
            throw UnsupportedGate("no native rotation pair to conjugate " + std::string(sim::to_string(g.kind)));
        }
        const std::size_t q = g.targets[0];
        out_.add(Gate::rotation(rotation_kind(c), q, -kPi / 2));
        out_.add(Gate::parametric(rotation_kind(b), q, *g.param_slot));
        out_.add(Gate::rotation(rotation_kind(c), q, kPi / 2));
    }

    // U = W V W^dag with V = e^{i phi} RZ(a) RY(b) RZ(c), so in time order
    // U ~ R_outer(c), R_middle(b), R_outer(a).
    void lower_fixed_1q(std::size_t q, const M2& u) {
        const M2 v = mul(dagger(w_), mul(u, w_));
        const Amp det = v[0] * v[3] - v[1] * v[2];
        const Amp phase = std::polar(1.0, -std::arg(det) / 2);
        const Amp v00 = v[0] * phase, v10 = v[2] * phase, v11 = v[3] * phase;
        const double b = 2 * std::atan2(std::abs(v10), std::abs(v00));
        const double sum = std::abs(v11) > kElide ? 2 * std::arg(v11) : 0.0;
        const double diff = std::abs(v10) > kElide ? 2 * std::arg(v10) : 0.0;
        const double a = (sum + diff) / 2, c = (sum - diff) / 2;
        emit(outer_, q, c);
        emit(middle_, q, b);
        emit(outer_, q, a);
    }

    void emit(int axis, std::size_t q, double angle) {
        angle = normalize_angle(angle);
        if (std::abs(angle) < kElide) return;
        out_.add(Gate::rotation(rotation_kind(axis), q, angle));
    }

    const NativeGateSet& natives_;
    Circuit& out_;
    bool axes_[3] = {false, false, false};
    int outer_ = AZ, middle_ = AY;
    M2 w_{};
};

}  // namespace

QubitMap QubitMap::identity(std::size_t num_logical) {
    QubitMap m;
    for (std::size_t i = 0; i < num_logical; ++i) m.initial.push_back(i);
    m.final = m.initial;
    return m;
}

Circuit decompose_to_native(const Circuit& circuit, const NativeGateSet& natives) {
    Circuit out(circuit.num_qubits(), circuit.num_params());
    Lowering lowering(natives, out);
    for (const Gate& g : circuit.gates()) lowering.lower(g);
    return out;
}

CompileStats stats_of(const Circuit& circuit, std::size_t swap_inserted) {
    return {circuit.depth(), circuit.two_qubit_count(), swap_inserted, circuit.size()};
}

CompiledCircuit route_to_topology(const Circuit& circuit, const Topology& topo) {
    const std::size_t n = circuit.num_qubits();
    if (n > topo.num_qubits()) {
        throw InvalidInput("circuit needs " + std::to_string(n) + " qubits, topology has " +
                           std::to_string(topo.num_qubits()));
    }
    CompiledCircuit result;
    result.circuit = Circuit(topo.num_qubits(), circuit.num_params());
    QubitMap& map = result.qubit_map;
    map = QubitMap::identity(n);
    std::vector<std::size_t>& l2p = map.final;
    // p2l over all physical sites; unused sites hold no logical qubit.
    constexpr auto kFree = static_cast<std::size_t>(-1);
    std::vector<std::size_t> p2l(topo.num_qubits(), kFree);
    for (std::size_t l = 0; l < n; ++l) p2l[l] = l;

    for (const Gate& g : circuit.gates()) {
        if (g.targets.size() > 2) {
            throw UnsupportedGate("route_to_topology: lower " + std::string(sim::to_string(g.kind)) +
                                  " to 2-qubit gates first");
        }
        if (g.targets.size() == 2) {
            const std::size_t mover = std::min(g.targets[0], g.targets[1]);
            const std::size_t anchor = std::max(g.targets[0], g.targets[1]);
            if (!topo.adjacent(l2p[mover], l2p[anchor])) {
                const auto path = topo.shortest_path(l2p[mover], l2p[anchor]);
                for (std::size_t k = 0; k + 2 < path.size(); ++k) {
                    const std::size_t pa = path[k], pb = path[k + 1];
                    map.swaps.push_back({result.circuit.size(), pa, pb});
                    result.circuit.add(Gate::fixed(GateKind::SWAP, {pa, pb}));
                    std::swap(p2l[pa], p2l[pb]);
                    if (p2l[pa] != kFree) l2p[p2l[pa]] = pa;
                    if (p2l[pb] != kFree) l2p[p2l[pb]] = pb;
                }
            }
        }
        Gate mapped = g;
        for (auto& t : mapped.targets) t = l2p[t];
        result.circuit.add(std::move(mapped));
    }
    result.stats = stats_of(result.circuit, map.swaps.size());
    return result;
}

CompiledCircuit compile(const Circuit& circuit, const NativeGateSet& natives, const Topology& topo) {
    CompiledCircuit routed = route_to_topology(decompose_to_native(circuit, natives), topo);
    CompiledCircuit out;
    out.circuit = decompose_to_native(routed.circuit, natives);
    out.qubit_map = std::move(routed.qubit_map);
    out.stats = stats_of(out.circuit, routed.stats.swap_inserted);
    return out;
}

std::size_t count_nonadjacent(const Circuit& circuit, const Topology& topo) {
    std::size_t bad = 0;
    for (const Gate& g : circuit.gates()) {
        if (g.targets.size() < 2) continue;
        for (std::size_t i = 0; i < g.targets.size(); ++i) {
            for (std::size_t j = i + 1; j < g.targets.size(); ++j) {
                if (!topo.adjacent(g.targets[i], g.targets[j])) {
                    ++bad;
                    goto next;
                }
            }
        }
    next:;
    }
    return bad;
}

bool verify_equivalence(const Circuit& a, const Circuit& b, const QubitMap& map, std::span<const double> params) {
    constexpr std::size_t kMaxCheck = 10;
    constexpr double kTol = 1e-10;
    const std::size_t n = a.num_qubits(), m = b.num_qubits();
    if (n > kMaxCheck || m > kMaxCheck) {
        throw SizeLimitError("verify_equivalence is limited to " + std::to_string(kMaxCheck) + " qubits");
    }
    if (map.initial.size() != n || map.final.size() != n || m < n) {
        throw InvalidInput("qubit map does not match the circuits");
    }
    auto place = [&](std::uint64_t logical, const std::vector<std::size_t>& layout) {
        std::uint64_t phys = 0;
        for (std::size_t l = 0; l < n; ++l) {
            if ((logical >> l) & 1U) phys |= std::uint64_t{1} << layout[l];
        }
        return phys;
    };
    const auto pa = a.num_params() ? params : std::span<const double>{};
    const auto pb = b.num_params() ? params : std::span<const double>{};
    std::optional<Amp> phase;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        const auto sa = sim::run_statevector(a, pa, sim::StateVector::basis_state(n, x));
        const auto sb = sim::run_statevector(b, pb, sim::StateVector::basis_state(m, place(x, map.initial)));
        std::vector<Amp> expect(sb.dimension(), Amp(0.0));
        for (std::uint64_t y = 0; y < sa.dimension(); ++y) expect[place(y, map.final)] = sa[y];
        if (!phase) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < expect.size(); ++i) {
                if (std::abs(expect[i]) > std::abs(expect[best])) best = i;
            }
            if (std::abs(sb[best]) < 1e-6) return false;
            phase = sb[best] / expect[best];
            phase = *phase / std::abs(*phase);
        }
        for (std::size_t i = 0; i < expect.size(); ++i) {
            if (std::abs(sb[i] - *phase * expect[i]) > kTol) return false;
        }
    }
    return true;
}

bool verify_equivalence(const Circuit& a, const Circuit& b, std::span<const double> params) {
    if (a.num_qubits() != b.num_qubits()) return false;
    return verify_equivalence(a, b, QubitMap::identity(a.num_qubits()), params);
}

std::string logical_bitstring(const std::string& physical_bits, const QubitMap& map) {
    const std::size_t m = physical_bits.size(), n = map.final.size();
    std::string out(n, '0');
    for (std::size_t l = 0; l < n; ++l) {
        if (map.final[l] >= m) throw IndexError("bitstring shorter than the layout");
        out[n - 1 - l] = physical_bits[m - 1 - map.final[l]];
    }
    return out;
}

}  // namespace qutil::compile
