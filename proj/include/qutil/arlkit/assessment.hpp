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

#include <string>
#include <string_view>
#include <vector>

#include "qutil/arlkit/labels.hpp"

namespace qutil::arl {

/// Ordered readiness levels; 4a (ideal simulation) precedes 4b (noisy).
enum class ArlLevel { ARL1, ARL2, ARL3, ARL4a, ARL4b, ARL5 };

/// "1", "2", "3", "4a", "4b", "5".
std::string_view to_string(ArlLevel level);
ArlLevel parse_arl_level(std::string_view text);

/// Milestone flags as found in the literature. Inputs may have gaps.
struct EvidenceRecord {
    bool has_concept = false;
    bool poc_benefit_vs_scaled_classical = false;
    bool extrapolation_shows_advantage = false;
    bool ideal_sim_utility = false;
    bool noisy_sim_utility = false;
    bool hardware_utility = false;
    std::vector<std::string> citations;
};

/// Highest level whose milestone and all earlier milestones hold, in the
/// order concept, poc, extrapolation, ideal sim, noisy sim, hardware.
/// Throws InvalidInput when has_concept is false.
ArlLevel assess_arl(const EvidenceRecord& e);

/// One message per milestone flag that is set beyond the unbroken prefix.
std::vector<std::string> evidence_gaps(const EvidenceRecord& e);

struct ArlAssessment {
    std::string id;     // "vqe", "re-uploading", ...
    std::string name;   // "VQE", "Re-Uploading", ...
    std::string field;  // application area heading
    ArlLevel level = ArlLevel::ARL1;
    ExtendedLabels labels;
    EvidenceRecord evidence;
    std::vector<std::string> gaps;
};

/// Builds an assessment; the level is computed from the evidence.
ArlAssessment make_assessment(std::string id, std::string name, std::string field, ExtendedLabels labels,
                              EvidenceRecord evidence);

/// The eleven surveyed applications in table order.
const std::vector<ArlAssessment>& builtin_survey();

/// Throws InvalidInput for an unknown id.
const ArlAssessment& survey_row(std::string_view id);

}  // namespace qutil::arl
