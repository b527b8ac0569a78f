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

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>

namespace qutil::swapc {

/// Physical and economic footprint of a device. Classical devices leave the
/// qubit fields empty.
struct DeviceSpec {
    std::string name;
    double power_watts = 0.0;
    double volume_liters = 0.0;
    double weight_kg = 0.0;
    double cost = 0.0;  // currency units, >= 0
    std::optional<std::size_t> qubit_count{};
    std::optional<std::string> native_gates{};  // NativeGateSet text
    std::optional<std::string> topology{};      // TopologyKind name

    /// Throws InvalidInput unless power, volume and weight are > 0 and cost >= 0.
    void validate() const;
};

DeviceSpec device_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DeviceSpec& d);
DeviceSpec load_device(const std::string& path);

/// performance / (runtime * power); score per joule. All inputs > 0.
double score1(double performance, double runtime_seconds, double power_watts);
/// performance / (volume * runtime * power). All inputs > 0.
double score2(double performance, double volume_liters, double runtime_seconds, double power_watts);

/// True iff volume, weight and cost of a and b are pairwise within a
/// multiplicative factor f (max/min <= f). Zero costs on both sides count
/// as equal. Requires f >= 1.
bool similarity_gate(const DeviceSpec& a, const DeviceSpec& b, double f = 2.0);

/// Result of one run on one device for a task.
struct RunOutcome {
    std::string metric;        // name of the accuracy metric, e.g. "abs_energy_error"
    double performance = 0.0;  // benchmark score, > 0
    double runtime_seconds = 0.0;
    double accuracy_error = 0.0;  // >= 0, lower is better
    DeviceSpec device;

    double energy_joules() const { return runtime_seconds * device.power_watts; }
    void validate() const;
};

RunOutcome outcome_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunOutcome& o);
RunOutcome load_outcome(const std::string& path);

enum class Verdict { QuantumUtility, NoUtility, NotComparable };
std::string_view to_string(Verdict v);

struct UtilityVerdict {
    bool comparable = false;
    bool faster = false;
    bool less_energy = false;
    bool more_accurate = false;
    Verdict verdict = Verdict::NotComparable;
};

/// Criteria are strict comparisons of q against c; "less power" is read as
/// less total energy (runtime * power). verdict is QuantumUtility iff the
/// devices are comparable and at least one criterion holds. Throws
/// InvalidInput when the two outcomes use different accuracy metrics.
UtilityVerdict utility_verdict(const RunOutcome& q, const RunOutcome& c, double f = 2.0);

/// Echoes both outcomes, the factor, and the decision.
nlohmann::json verdict_report(const RunOutcome& q, const RunOutcome& c, double f, const UtilityVerdict& v);
std::string verdict_markdown(const RunOutcome& q, const RunOutcome& c, double f, const UtilityVerdict& v);

}  // namespace qutil::swapc
