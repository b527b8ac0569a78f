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
#include <string_view>
#include <vector>

#include "qutil/simcore/pauli_sum.hpp"

namespace qutil::algo {

using sim::PauliSum;
using sim::PauliTerm;

/// Largest register for dense diagonalisation.
inline constexpr std::size_t kMaxDenseQubits = 12;

/// Smallest eigenvalue of the dense 2^N x 2^N matrix of `h`. N <= 12.
double exact_ground_energy(const PauliSum& h);

/// True when the words agree or one is 'I' on every qubit.
bool qubit_wise_commute(std::string_view a, std::string_view b);

/// Greedy qubit-wise-commuting partition of the terms of `h`, as term
/// indices. Each term joins the first compatible group in order.
std::vector<std::vector<std::size_t>> group_pauli_terms(const PauliSum& h);

/// Number of groups that need a measurement circuit (contain a non-identity
/// word).
std::size_t measurement_circuit_count(const PauliSum& h);

}  // namespace qutil::algo
