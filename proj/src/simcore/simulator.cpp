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

#include "qutil/simcore/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "qutil/error.hpp"
#include "qutil/simcore/rng.hpp"

namespace qutil::sim {

namespace {

kernels::PauliMask pauli_on_targets(std::uint64_t code, const std::vector<std::size_t>& targets,
                                    std::string* label) {
    kernels::PauliMask m;
    if (label) label->clear();
    for (std::size_t j = 0; j < targets.size(); ++j) {
        const std::uint64_t bit = std::uint64_t{1} << targets[j];
        switch ((code >> (2 * j)) & 3U) {
            case 0:
                if (label) label->push_back('I');
                break;
            case 1:
                m.x_mask |= bit;
                if (label) label->push_back('X');
                break;
            case 2:
                m.x_mask |= bit;
                m.z_mask |= bit;
                ++m.num_y;
                if (label) label->push_back('Y');
                break;
            default:
                m.z_mask |= bit;
                if (label) label->push_back('Z');
                break;
        }
    }
    return m;
}

struct ErrorEvent {
    std::size_t gate_index;
    std::uint64_t code;
};

void check_shots(std::uint64_t shots) {
    if (shots == 0) throw InvalidInput("shots must be >= 1");
}

}  // namespace

void NoiseModel::validate() const {
    auto ok = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!ok(p1) || !ok(p2)) {
        throw InvalidInput("noise probabilities must lie in [0, 1] (p1=" + std::to_string(p1) +
                           ", p2=" + std::to_string(p2) + ")");
    }
}

StateVector apply_gate(StateVector state, const Gate& gate, std::optional<double> bound_angle) {
    state.apply(gate, bound_angle);
    return state;
}

StateVector run_statevector(const Circuit& circuit, std::span<const double> params) {
    return run_statevector(circuit, params, StateVector(circuit.num_qubits()));
}

StateVector run_statevector(const Circuit& circuit, std::span<const double> params, StateVector initial) {
    if (params.size() != circuit.num_params()) {
        throw InvalidInput("parameter vector has length " + std::to_string(params.size()) +
                           ", circuit expects " + std::to_string(circuit.num_params()));
    }
    if (initial.num_qubits() != circuit.num_qubits()) {
        throw InvalidInput("initial state qubit count does not match the circuit");
    }
    for (const Gate& g : circuit.gates()) {
        if (g.param_slot) {
            initial.apply(g, params[*g.param_slot]);
        } else {
            initial.apply(g);
        }
    }
    return initial;
}

double expectation(const StateVector& state, const PauliTerm& term) {
    if (term.word.size() != state.num_qubits()) {
        throw InvalidInput("observable acts on " + std::to_string(term.word.size()) + " qubits, state has " +
                           std::to_string(state.num_qubits()));
    }
    return term.coefficient * kernels::parallel::pauli_expectation(state.amplitudes(), pauli_mask(term.word));
}

double expectation(const StateVector& state, const PauliSum& observable) {
    if (observable.num_qubits() != state.num_qubits()) {
        throw InvalidInput("observable acts on " + std::to_string(observable.num_qubits()) +
                           " qubits, state has " + std::to_string(state.num_qubits()));
    }
    double e = 0.0;
    for (const auto& t : observable.terms()) e += expectation(state, t);
    return e;
}

std::vector<double> cumulative_probabilities(const StateVector& state) {
    std::vector<double> cdf(state.dimension());
    double acc = 0.0;
    for (std::size_t i = 0; i < cdf.size(); ++i) {
        acc += state.probability(i);
        cdf[i] = acc;
    }
    return cdf;
}

std::uint64_t draw_index(std::span<const double> cdf, Rng& rng) {
    const double u = rng.uniform() * cdf.back();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) return cdf.size() - 1;
    return static_cast<std::uint64_t>(it - cdf.begin());
}

Counts sample_counts(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
    check_shots(shots);
    const auto cdf = cumulative_probabilities(state);
    std::vector<std::uint64_t> tally(cdf.size(), 0);
    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) ++tally[draw_index(cdf, rng)];
    Counts counts;
    for (std::size_t i = 0; i < tally.size(); ++i) {
        if (tally[i]) counts.emplace(bitstring(i, state.num_qubits()), tally[i]);
    }
    return counts;
}

Counts run_noisy(const Circuit& circuit, std::span<const double> params, const NoiseModel& noise,
                 std::uint64_t shots, std::uint64_t seed, NoiseTally* tally) {
    noise.validate();
    check_shots(shots);
    const StateVector ideal = run_statevector(circuit, params);
    if (noise.is_ideal()) {
        if (tally) tally->error_free_shots += shots;
        return sample_counts(ideal, shots, seed);
    }
    const auto ideal_cdf = cumulative_probabilities(ideal);
    const auto& gates = circuit.gates();
    const auto num_shots = static_cast<std::int64_t>(shots);

    std::vector<std::uint64_t> outcome(shots);
    std::vector<std::vector<ErrorEvent>> errors(tally ? shots : 0);

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < num_shots; ++s) {
        Rng rng(substream_seed(seed, static_cast<std::uint64_t>(s)));
        // Error locations are drawn before the state is touched so error-free
        // shots can reuse the ideal distribution.
        std::vector<ErrorEvent> events;
        for (std::size_t gi = 0; gi < gates.size(); ++gi) {
            const std::size_t k = gates[gi].targets.size();
            const double p = k == 1 ? noise.p1 : noise.p2;
            if (!rng.bernoulli(p)) continue;
            const std::uint64_t paulis = (std::uint64_t{1} << (2 * k)) - 1;
            events.push_back({gi, 1 + rng.below(paulis)});
        }
        if (events.empty()) {
            outcome[static_cast<std::size_t>(s)] = draw_index(ideal_cdf, rng);
        } else {
            StateVector psi(circuit.num_qubits());
            std::size_t next = 0;
            for (std::size_t gi = 0; gi < gates.size(); ++gi) {
                const Gate& g = gates[gi];
                if (g.param_slot) {
                    psi.apply(g, params[*g.param_slot]);
                } else {
                    psi.apply(g);
                }
                while (next < events.size() && events[next].gate_index == gi) {
                    psi.apply_pauli(pauli_on_targets(events[next].code, g.targets, nullptr));
                    ++next;
                }
            }
            const auto cdf = cumulative_probabilities(psi);
            outcome[static_cast<std::size_t>(s)] = draw_index(cdf, rng);
        }
        if (tally) errors[static_cast<std::size_t>(s)] = std::move(events);
    }

    std::vector<std::uint64_t> hist(ideal.dimension(), 0);
    for (std::uint64_t o : outcome) ++hist[o];
    Counts counts;
    for (std::size_t i = 0; i < hist.size(); ++i) {
        if (hist[i]) counts.emplace(bitstring(i, circuit.num_qubits()), hist[i]);
    }
    if (tally) {
        std::string label;
        for (const auto& ev : errors) {
            if (ev.empty()) ++tally->error_free_shots;
            for (const auto& e : ev) {
                pauli_on_targets(e.code, gates[e.gate_index].targets, &label);
                ++tally->inserted[label];
            }
        }
    }
    return counts;
}

double frequency(const Counts& counts, const std::string& bits) {
    const auto total = total_shots(counts);
    if (total == 0) return 0.0;
    const auto it = counts.find(bits);
    return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(total);
}

std::uint64_t total_shots(const Counts& counts) {
    std::uint64_t t = 0;
    for (const auto& [_, c] : counts) t += c;
    return t;
}

}  // namespace qutil::sim
