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

#include "qutil/simcore/kernels.hpp"

namespace qutil::sim {

/// Pauli word characters follow the bitstring convention: word[0] acts on the
/// highest qubit, word[n-1] on qubit 0.
struct PauliTerm {
    double coefficient = 0.0;
    std::string word;

    friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

kernels::PauliMask pauli_mask(std::string_view word);

/// Letter acting on `qubit` in `word`.
char pauli_letter(std::string_view word, std::size_t qubit);

/// Real-weighted sum of Pauli words over a fixed register size. Duplicate
/// words are merged on construction, keeping the first occurrence's position.
class PauliSum {
  public:
    PauliSum() = default;
    PauliSum(std::size_t num_qubits, std::vector<PauliTerm> terms);

    /// Text format: one "coefficient word" per line; blank lines and lines
    /// starting with '#' are ignored.
    static PauliSum parse(std::string_view text);
    std::string to_text() const;

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Sum of |coefficient|; bounds the spectral radius.
    double one_norm() const;

    friend bool operator==(const PauliSum&, const PauliSum&) = default;

  private:
    std::size_t num_qubits_ = 0;
    std::vector<PauliTerm> terms_;
};

/// -sum_i Z_i Z_{i+1} - g sum_i X_i on an open chain of `n` sites.
PauliSum transverse_field_ising(std::size_t n, double g = 1.0);

}  // namespace qutil::sim
