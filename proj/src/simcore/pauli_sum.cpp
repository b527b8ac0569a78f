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

#include "qutil/simcore/pauli_sum.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "qutil/error.hpp"

namespace qutil::sim {

kernels::PauliMask pauli_mask(std::string_view word) {
    kernels::PauliMask m;
    const std::size_t n = word.size();
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t bit = std::uint64_t{1} << (n - 1 - k);
        switch (word[k]) {
            case 'I': break;
            case 'X': m.x_mask |= bit; break;
            case 'Y':
                m.x_mask |= bit;
                m.z_mask |= bit;
                ++m.num_y;
                break;
            case 'Z': m.z_mask |= bit; break;
            default: throw InvalidInput("invalid Pauli letter '" + std::string(1, word[k]) + "'");
        }
    }
    return m;
}

char pauli_letter(std::string_view word, std::size_t qubit) { return word[word.size() - 1 - qubit]; }

PauliSum::PauliSum(std::size_t num_qubits, std::vector<PauliTerm> terms) : num_qubits_(num_qubits) {
    if (num_qubits == 0) throw InvalidInput("PauliSum needs at least one qubit");
    std::unordered_map<std::string, std::size_t> seen;
    for (auto& t : terms) {
        if (t.word.size() != num_qubits) {
            throw InvalidInput("Pauli word '" + t.word + "' has length " + std::to_string(t.word.size()) +
                               ", expected " + std::to_string(num_qubits));
        }
        if (!std::isfinite(t.coefficient)) throw InvalidInput("non-finite coefficient for " + t.word);
        pauli_mask(t.word);
        if (auto it = seen.find(t.word); it != seen.end()) {
            terms_[it->second].coefficient += t.coefficient;
        } else {
            seen.emplace(t.word, terms_.size());
            terms_.push_back(std::move(t));
        }
    }
}

PauliSum PauliSum::parse(std::string_view text) {
    std::vector<PauliTerm> terms;
    std::size_t n = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string coef_str;
        std::string word;
        std::string extra;
        ls >> coef_str >> word;
        if (word.empty() || (ls >> extra && !extra.empty() && extra[0] != '#')) {
            throw InvalidInput("line " + std::to_string(lineno) + ": expected 'coefficient word'");
        }
        double coef = 0.0;
        const auto res = std::from_chars(coef_str.data(), coef_str.data() + coef_str.size(), coef);
        if (res.ec != std::errc() || res.ptr != coef_str.data() + coef_str.size()) {
            throw InvalidInput("line " + std::to_string(lineno) + ": bad coefficient '" + coef_str + "'");
        }
        if (n == 0) n = word.size();
        terms.push_back({coef, word});
    }
    if (terms.empty()) throw InvalidInput("Hamiltonian file contains no terms");
    return PauliSum(n, std::move(terms));
}

std::string PauliSum::to_text() const {
    std::ostringstream out;
    out << std::setprecision(17);
    for (const auto& t : terms_) out << t.coefficient << ' ' << t.word << '\n';
    return out.str();
}

double PauliSum::one_norm() const {
    double s = 0.0;
    for (const auto& t : terms_) s += std::abs(t.coefficient);
    return s;
}

PauliSum transverse_field_ising(std::size_t n, double g) {
    if (n < 2) throw InvalidInput("transverse-field Ising chain needs at least 2 sites");
    std::vector<PauliTerm> terms;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::string w(n, 'I');
        w[i] = 'Z';
        w[i + 1] = 'Z';
        terms.push_back({-1.0, w});
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::string w(n, 'I');
        w[i] = 'X';
        terms.push_back({-g, w});
    }
    return PauliSum(n, std::move(terms));
}

}  // namespace qutil::sim
