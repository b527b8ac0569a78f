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

#include "qutil/arlkit/assessment.hpp"

#include <array>

#include "qutil/error.hpp"

namespace qutil::arl {

namespace {

constexpr std::array<std::string_view, 6> kLevelNames = {"1", "2", "3", "4a", "4b", "5"};

std::array<bool, 6> milestones(const EvidenceRecord& e) {
    return {e.has_concept,       e.poc_benefit_vs_scaled_classical, e.extrapolation_shows_advantage,
            e.ideal_sim_utility, e.noisy_sim_utility,               e.hardware_utility};
}

constexpr std::array<std::string_view, 6> kMilestoneNames = {
    "concept", "proof of concept", "extrapolated advantage", "ideal-simulation utility",
    "noisy-simulation utility", "hardware utility"};

std::size_t unbroken_prefix(const EvidenceRecord& e) {
    const auto m = milestones(e);
    std::size_t k = 0;
    while (k < m.size() && m[k]) ++k;
    return k;
}

}  // namespace

std::string_view to_string(ArlLevel level) { return kLevelNames[static_cast<std::size_t>(level)]; }

ArlLevel parse_arl_level(std::string_view text) {
    if (text.starts_with("ARL")) text.remove_prefix(3);
    if (text.starts_with("-")) text.remove_prefix(1);
    for (std::size_t i = 0; i < kLevelNames.size(); ++i) {
        if (text == kLevelNames[i]) return static_cast<ArlLevel>(i);
    }
    throw InvalidInput("unknown ARL '" + std::string(text) + "'");
}

ArlLevel assess_arl(const EvidenceRecord& e) {
    if (!e.has_concept) throw InvalidInput("evidence without a concept cannot be classified");
    return static_cast<ArlLevel>(unbroken_prefix(e) - 1);
}

std::vector<std::string> evidence_gaps(const EvidenceRecord& e) {
    const auto m = milestones(e);
    const std::size_t k = unbroken_prefix(e);
    std::vector<std::string> gaps;
    for (std::size_t i = k + 1; i < m.size(); ++i) {
        if (m[i]) {
            gaps.push_back(std::string(kMilestoneNames[i]) + " claimed without " + std::string(kMilestoneNames[k]) +
                           "; level capped");
        }
    }
    return gaps;
}

ArlAssessment make_assessment(std::string id, std::string name, std::string field, ExtendedLabels labels,
                              EvidenceRecord evidence) {
    ArlAssessment a{std::move(id), std::move(name), std::move(field), assess_arl(evidence), std::move(labels),
                    std::move(evidence), {}};
    a.gaps = evidence_gaps(a.evidence);
    return a;
}

const std::vector<ArlAssessment>& builtin_survey() {
    static const std::vector<ArlAssessment> rows = [] {
        using C = Compilability;
        using K = Connectivity;
        using R = Robustness;
        using P = Parallelizability;
        const auto row = [](std::string id, std::string name, std::string field, const char* circuits,
                            const char* depth, const char* shots, C c, K k, R r, P p, EvidenceRecord e) {
            return make_assessment(std::move(id), std::move(name), std::move(field),
                                   {ScalingExpr::parse(circuits), ScalingExpr::parse(depth), ScalingExpr::parse(shots),
                                    c, k, r, p},
                                   std::move(e));
        };
        const auto poc = [](std::vector<std::string> cites) {
            return EvidenceRecord{true, true, false, false, false, false, std::move(cites)};
        };
        const std::string chem = "Quantum chemistry and quantum simulation";
        const std::string cls = "Binary and multi-class classification";
        const std::string gen = "Generative modeling";
        const std::string qnn = "Quantum neural networks";
        const std::string data = "Data analysis";
        return std::vector<ArlAssessment>{
            row("vqe", "VQE", chem, "O(N)", "O(N)", "O(1)", C::Native, K::Linear, R::Variational, P::CircuitBased,
                {true, true, true, false, false, false, {"Peruzzo et al. 2014"}}),
            row("qrbm", "QRBM", chem, "O(1)", "O(nm)", "O(binom(n, n_p))", C::ClassicalControl, K::AllToAll,
                R::Variational, P::ShotBased, poc({"Xia and Kais 2018"})),
            row("varqite", "VarQiTE", chem, "O(tq(q+p))", "O(q)", "O(1)", C::NonNative1q2q, K::AllToAll,
                R::Variational, P::CircuitBased, poc({"McArdle et al. 2019"})),
            row("qk", "QK", cls, "O(binom(|T|, 2))", "O(N)", "O(2^N)", C::NonNative1q2q, K::Linear,
                R::NonVariational, P::CircuitBased, poc({"Schuld and Killoran 2019"})),
            row("qvc", "QVC", cls, "O(|T|)", "O(N)", "O(1)", C::NonNative1q2q, K::Linear, R::Variational,
                P::CircuitBased, poc({"Schuld and Killoran 2019", "Havlicek et al. 2019"})),
            row("re-uploading", "Re-Uploading", cls, "O(|T|)", "O(L)", "O(1)", C::NonNative1q2q, K::Circular,
                R::Variational, P::CircuitBased, poc({"Perez-Salinas et al. 2020"})),
            row("qcbm", "QCBM", gen, "O(1)", "O(N)", "O(2^N)", C::Native, K::Linear, R::Variational, P::ShotBased,
                poc({"Benedetti et al. 2019", "Gili et al. 2022"})),
            row("qnbm", "QNBM", gen, "O(1)", "O(E)", "O(2^n_out)", C::ClassicalControl, K::AllToAll,
                R::Variational, P::ShotBased, poc({"Gili et al. 2023"})),
            row("qcnn", "QCNN", qnn, "O(|T|)", "O(N ceil(log_{1/r} N))", "O(1)", C::ClassicalControl, K::AllToAll,
                R::Variational, P::CircuitBased, poc({"Cong et al. 2019"})),
            row("qgnn", "QGNN", qnn, "O(|T|)", "O(p)", "O(1)", C::NonNative1q2q, K::AllToAll, R::Variational,
                P::CircuitBased, poc({"Verdon et al. 2019"})),
            row("nisq-tda", "NISQ-TDA", data, "O(n_v)", "O(V)", "O(2^V)", C::ClassicalControl, K::AllToAll,
                R::NonVariational, P::CircuitBased, poc({"Akhalwaya et al. 2022"})),
        };
    }();
    return rows;
}

const ArlAssessment& survey_row(std::string_view id) {
    for (const auto& r : builtin_survey()) {
        if (r.id == id) return r;
    }
    throw InvalidInput("unknown application id '" + std::string(id) + "'");
}

}  // namespace qutil::arl
