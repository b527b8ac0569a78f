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

#include "qutil/swapc/swapc.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qutil/error.hpp"
#include "qutil/qcompile/native_gates.hpp"
#include "qutil/qcompile/topology.hpp"

namespace qutil::swapc {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0) || !std::isfinite(v)) throw InvalidInput(std::string(what) + " must be a positive number");
}

bool within(double a, double b, double f) {
    if (a == b) return true;
    return std::max(a, b) <= f * std::min(a, b);
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string num(double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
}

}  // namespace

void DeviceSpec::validate() const {
    require_positive(power_watts, "power_watts");
    require_positive(volume_liters, "volume_liters");
    require_positive(weight_kg, "weight_kg");
    if (!(cost >= 0) || !std::isfinite(cost)) throw InvalidInput("cost must be >= 0");
    if (native_gates) compile::NativeGateSet::parse(*native_gates);
    if (topology) compile::parse_topology_kind(*topology);
}

DeviceSpec device_from_json(const nlohmann::json& j) {
    try {
        DeviceSpec d;
        d.name = j.at("name").get<std::string>();
        d.power_watts = j.at("power_watts").get<double>();
        d.volume_liters = j.at("volume_liters").get<double>();
        d.weight_kg = j.at("weight_kg").get<double>();
        d.cost = j.value("cost", 0.0);
        if (j.contains("qubit_count")) d.qubit_count = j["qubit_count"].get<std::size_t>();
        if (j.contains("native_gates")) d.native_gates = j["native_gates"].get<std::string>();
        if (j.contains("topology")) d.topology = j["topology"].get<std::string>();
        d.validate();
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed device spec: ") + e.what());
    }
}

nlohmann::json to_json(const DeviceSpec& d) {
    nlohmann::json j = {{"name", d.name},
                        {"power_watts", d.power_watts},
                        {"volume_liters", d.volume_liters},
                        {"weight_kg", d.weight_kg},
                        {"cost", d.cost}};
    if (d.qubit_count) j["qubit_count"] = *d.qubit_count;
    if (d.native_gates) j["native_gates"] = *d.native_gates;
    if (d.topology) j["topology"] = *d.topology;
    return j;
}

DeviceSpec load_device(const std::string& path) { return device_from_json(read_json(path)); }

double score1(double performance, double runtime_seconds, double power_watts) {
    require_positive(performance, "performance");
    require_positive(runtime_seconds, "runtime");
    require_positive(power_watts, "power");
    return performance / (runtime_seconds * power_watts);
}

double score2(double performance, double volume_liters, double runtime_seconds, double power_watts) {
    require_positive(performance, "performance");
    require_positive(volume_liters, "volume");
    require_positive(runtime_seconds, "runtime");
    require_positive(power_watts, "power");
    return performance / (volume_liters * runtime_seconds * power_watts);
}

bool similarity_gate(const DeviceSpec& a, const DeviceSpec& b, double f) {
    if (!(f >= 1) || !std::isfinite(f)) throw InvalidInput("similarity factor must be >= 1");
    a.validate();
    b.validate();
    return within(a.volume_liters, b.volume_liters, f) && within(a.weight_kg, b.weight_kg, f) &&
           within(a.cost, b.cost, f);
}

void RunOutcome::validate() const {
    require_positive(performance, "performance");
    require_positive(runtime_seconds, "runtime_seconds");
    if (!(accuracy_error >= 0) || !std::isfinite(accuracy_error)) throw InvalidInput("accuracy_error must be >= 0");
    device.validate();
}

RunOutcome outcome_from_json(const nlohmann::json& j) {
    try {
        RunOutcome o;
        o.metric = j.at("metric").get<std::string>();
        o.performance = j.at("performance").get<double>();
        o.runtime_seconds = j.at("runtime_seconds").get<double>();
        o.accuracy_error = j.at("accuracy_error").get<double>();
        o.device = device_from_json(j.at("device"));
        o.validate();
        return o;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed run outcome: ") + e.what());
    }
}

nlohmann::json to_json(const RunOutcome& o) {
    return {{"metric", o.metric},
            {"performance", o.performance},
            {"runtime_seconds", o.runtime_seconds},
            {"accuracy_error", o.accuracy_error},
            {"device", to_json(o.device)}};
}

RunOutcome load_outcome(const std::string& path) { return outcome_from_json(read_json(path)); }

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::QuantumUtility: return "quantum_utility";
        case Verdict::NoUtility: return "no_utility";
        case Verdict::NotComparable: break;
    }
    return "not_comparable";
}

UtilityVerdict utility_verdict(const RunOutcome& q, const RunOutcome& c, double f) {
    if (q.metric != c.metric) {
        throw InvalidInput("outcomes use different accuracy metrics ('" + q.metric + "' vs '" + c.metric + "')");
    }
    q.validate();
    c.validate();
    UtilityVerdict v;
    v.comparable = similarity_gate(q.device, c.device, f);
    v.faster = q.runtime_seconds < c.runtime_seconds;
    v.less_energy = q.energy_joules() < c.energy_joules();
    v.more_accurate = q.accuracy_error < c.accuracy_error;
    if (!v.comparable) {
        v.verdict = Verdict::NotComparable;
    } else {
        v.verdict = v.faster || v.less_energy || v.more_accurate ? Verdict::QuantumUtility : Verdict::NoUtility;
    }
    return v;
}

nlohmann::json verdict_report(const RunOutcome& q, const RunOutcome& c, double f, const UtilityVerdict& v) {
    return {{"quantum", to_json(q)},
            {"classical", to_json(c)},
            {"similarity_factor", f},
            {"energy_joules", {{"quantum", q.energy_joules()}, {"classical", c.energy_joules()}}},
            {"comparable", v.comparable},
            {"criteria", {{"faster", v.faster}, {"less_energy", v.less_energy}, {"more_accurate", v.more_accurate}}},
            {"verdict", std::string(to_string(v.verdict))}};
}

std::string verdict_markdown(const RunOutcome& q, const RunOutcome& c, double f, const UtilityVerdict& v) {
    std::ostringstream out;
    out << "# Utility verdict\n\n"
        << "**Verdict:** " << to_string(v.verdict) << "\n\n"
        << "| | quantum | classical |\n|---|---|---|\n"
        << "| device | " << q.device.name << " | " << c.device.name << " |\n"
        << "| runtime (s) | " << num(q.runtime_seconds) << " | " << num(c.runtime_seconds) << " |\n"
        << "| power (W) | " << num(q.device.power_watts) << " | " << num(c.device.power_watts) << " |\n"
        << "| energy (J) | " << num(q.energy_joules()) << " | " << num(c.energy_joules()) << " |\n"
        << "| " << q.metric << " | " << num(q.accuracy_error) << " | " << num(c.accuracy_error) << " |\n"
        << "| volume (L) | " << num(q.device.volume_liters) << " | " << num(c.device.volume_liters) << " |\n"
        << "| weight (kg) | " << num(q.device.weight_kg) << " | " << num(c.device.weight_kg) << " |\n"
        << "| cost | " << num(q.device.cost) << " | " << num(c.device.cost) << " |\n\n"
        << "- similar footprint (factor " << num(f) << "): " << (v.comparable ? "yes" : "no") << '\n'
        << "- faster: " << (v.faster ? "yes" : "no") << '\n'
        << "- less energy: " << (v.less_energy ? "yes" : "no") << '\n'
        << "- more accurate: " << (v.more_accurate ? "yes" : "no") << '\n';
    return out.str();
}

}  // namespace qutil::swapc
