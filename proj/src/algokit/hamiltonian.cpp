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

#include "qutil/algokit/hamiltonian.hpp"

#include <Eigen/Dense>
#include <bit>
#include <complex>

#include "qutil/error.hpp"

namespace qutil::algo {

namespace {

bool all_identity(std::string_view w) { return w.find_first_not_of('I') == std::string_view::npos; }

// H = sum_k c_k P_k with P_k|i> = i^{num_y} (-1)^{popcount(i & z)} |i ^ x>.
template <typename Matrix>
Matrix dense(const PauliSum& h) {
    using Scalar = typename Matrix::Scalar;
    const Eigen::Index dim = Eigen::Index(1) << h.num_qubits();
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto& t : h.terms()) {
        const auto p = sim::pauli_mask(t.word);
        const std::complex<double> iy[] = {1.0, {0, 1}, -1.0, {0, -1}};
        const std::complex<double> base = t.coefficient * iy[p.num_y % 4];
        for (Eigen::Index i = 0; i < dim; ++i) {
            const auto ui = static_cast<std::uint64_t>(i);
            const std::complex<double> v = (std::popcount(ui & p.z_mask) & 1) ? -base : base;
            if constexpr (std::is_same_v<Scalar, double>) {
                m(static_cast<Eigen::Index>(ui ^ p.x_mask), i) += v.real();
            } else {
                m(static_cast<Eigen::Index>(ui ^ p.x_mask), i) += v;
            }
        }
    }
    return m;
}

}  // namespace

double exact_ground_energy(const PauliSum& h) {
    const std::size_t n = h.num_qubits();
    if (n == 0) throw InvalidInput("empty Hamiltonian");
    if (n > kMaxDenseQubits) {
        throw SizeLimitError(std::to_string(n) + " qubits exceeds the dense diagonalisation limit of " +
                             std::to_string(kMaxDenseQubits));
    }
    bool real = true;
    for (const auto& t : h.terms()) {
        if (sim::pauli_mask(t.word).num_y % 2) real = false;
    }
    if (real) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense<Eigen::MatrixXd>(h), Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense<Eigen::MatrixXcd>(h), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

bool qubit_wise_commute(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 'I' && b[i] != 'I' && a[i] != b[i]) return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> group_pauli_terms(const PauliSum& h) {
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::string> basis;  // merged letters of each group
    for (std::size_t k = 0; k < h.size(); ++k) {
        const std::string& w = h.terms()[k].word;
        bool placed = false;
        for (std::size_t g = 0; g < groups.size() && !placed; ++g) {
            if (!qubit_wise_commute(basis[g], w)) continue;
            groups[g].push_back(k);
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (w[i] != 'I') basis[g][i] = w[i];
            }
            placed = true;
        }
        if (!placed) {
            groups.push_back({k});
            basis.push_back(w);
        }
    }
    return groups;
}

std::size_t measurement_circuit_count(const PauliSum& h) {
    std::size_t count = 0;
    for (const auto& g : group_pauli_terms(h)) {
        for (std::size_t k : g) {
            if (!all_identity(h.terms()[k].word)) {
                ++count;
                break;
            }
        }
    }
    return count;
}

}  // namespace qutil::algo
