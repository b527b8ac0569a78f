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

#include <sstream>

#include "internal.hpp"
#include "qutil/arlkit/assessment.hpp"
#include "qutil/arlkit/report.hpp"
#include "qutil/cli/artifacts.hpp"
#include "qutil/error.hpp"
#include "qutil/qcompile/compiler.hpp"
#include "qutil/simcore/circuit_json.hpp"
#include "qutil/swapc/swapc.hpp"

namespace qutil::cli::detail {

namespace {

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(10);
    s << v;
    return s.str();
}

// ---- compile ---------------------------------------------------------------

struct CompileOptions {
    std::string circuit;
    std::string topology = "all_to_all";
    std::string natives = "default";
    std::size_t qubits = 0;  // physical register; 0: the circuit's width
};

/// Largest register verify_equivalence accepts.
constexpr std::size_t kMaxVerifyQubits = 10;

json stats_json(const compile::CompileStats& s) {
    return {{"native_depth", s.native_depth},
            {"two_qubit_count", s.two_qubit_count},
            {"swap_inserted", s.swap_inserted},
            {"gate_count", s.gate_count}};
}

json run_compile(const CompileOptions& o, Context& ctx) {
    const auto circuit = sim::circuit_from_json(read_json_file(o.circuit));
    const auto natives = compile::NativeGateSet::parse(o.natives);
    const std::size_t physical = o.qubits == 0 ? circuit.num_qubits() : o.qubits;
    if (physical < circuit.num_qubits()) throw InvalidInput("--qubits is smaller than the circuit");
    sim::Circuit widened(physical, circuit.num_params());
    widened.append(circuit);
    const compile::Topology topo(compile::parse_topology_kind(o.topology), physical);
    const auto compiled = compile::compile(widened, natives, topo);

    json verified = nullptr;  // null: register too large to check
    if (physical <= kMaxVerifyQubits && circuit.num_params() == 0) {
        verified = compile::verify_equivalence(widened, compiled.circuit, compiled.qubit_map);
    }
    const json stats = {{"input", stats_json(compile::stats_of(widened))},
                        {"compiled", stats_json(compiled.stats)},
                        {"swap_inserted", compiled.stats.swap_inserted},
                        {"nonadjacent_two_qubit", compile::count_nonadjacent(compiled.circuit, topo)},
                        {"topology", std::string(compile::to_string(topo.kind()))},
                        {"natives", natives.to_string()},
                        {"physical_qubits", physical},
                        {"equivalent", verified}};
    ctx.write_json("stats.json", stats);
    ctx.write_json("compiled.json", {{"circuit", sim::to_json(compiled.circuit)},
                                     {"qubit_map",
                                      {{"initial", compiled.qubit_map.initial},
                                       {"final", compiled.qubit_map.final}}}});
    std::string md = "# compile " + o.circuit + "\n\nTopology " + std::string(compile::to_string(topo.kind())) +
                     ", natives " + natives.to_string() + ".\n\n| quantity | input | compiled |\n|---|---|---|\n";
    const auto in = compile::stats_of(widened);
    md += "| native depth | " + std::to_string(in.native_depth) + " | " +
          std::to_string(compiled.stats.native_depth) + " |\n";
    md += "| two-qubit gates | " + std::to_string(in.two_qubit_count) + " | " +
          std::to_string(compiled.stats.two_qubit_count) + " |\n";
    md += "| gates | " + std::to_string(in.gate_count) + " | " + std::to_string(compiled.stats.gate_count) + " |\n";
    md += "| SWAPs inserted | - | " + std::to_string(compiled.stats.swap_inserted) + " |\n";
    md += "\nEquivalence check: " +
          std::string(verified.is_null() ? "skipped" : (verified.get<bool>() ? "passed" : "FAILED")) + ".\n";
    ctx.write_text("summary.md", md);
    ctx.stdout_ << md;
    if (!verified.is_null() && !verified.get<bool>()) throw RuntimeFailure("compiled circuit is not equivalent");
    return json::object();
}

// ---- score -----------------------------------------------------------------

struct ScoreOptions {
    double performance = 0.0;
    double runtime = 0.0;
    std::string device;
    double power = 0.0;
    double volume = 0.0;
};

json run_score(const ScoreOptions& o, Context& ctx) {
    double power = o.power, volume = o.volume;
    std::string name = "ad hoc";
    if (!o.device.empty()) {
        if (o.power > 0 || o.volume > 0) throw InvalidInput("--device conflicts with --power/--volume");
        const auto d = swapc::load_device(o.device);
        power = d.power_watts;
        volume = d.volume_liters;
        name = d.name;
    }
    const double s1 = swapc::score1(o.performance, o.runtime, power);
    json j = {{"device", name},
              {"performance", o.performance},
              {"runtime_seconds", o.runtime},
              {"power_watts", power},
              {"score1", s1}};
    std::vector<Series> curves{{"score1", {}}};
    if (volume > 0) {
        j["volume_liters"] = volume;
        j["score2"] = swapc::score2(o.performance, volume, o.runtime, power);
        curves.push_back({"score2", {}});
    }
    // Score against runtime around the measured point.
    for (int k = -4; k <= 4; ++k) {
        const double r = o.runtime * std::pow(2.0, k / 2.0);
        curves[0].points.emplace_back(r, swapc::score1(o.performance, r, power));
        if (volume > 0) curves[1].points.emplace_back(r, swapc::score2(o.performance, volume, r, power));
    }
    ctx.write_json("score.json", j);
    ctx.write_text("score.svg", plot_svg("Score vs runtime", "runtime [s]", "score", curves, true));
    std::string md = "# score\n\nDevice: " + name + ".\n\n| quantity | value |\n|---|---|\n| score1 = P/(R W) | " +
                     fmt(s1) + " |\n";
    if (volume > 0) md += "| score2 = P/(V R W) | " + fmt(j["score2"].get<double>()) + " |\n";
    ctx.write_text("summary.md", md);
    ctx.stdout_ << md;
    return json::object();
}

// ---- verdict ---------------------------------------------------------------

struct VerdictOptions {
    std::string quantum;
    std::string classical;
    double factor = 2.0;
};

json run_verdict(const VerdictOptions& o, Context& ctx) {
    const auto q = swapc::load_outcome(o.quantum);
    const auto c = swapc::load_outcome(o.classical);
    const auto v = swapc::utility_verdict(q, c, o.factor);
    ctx.write_json("verdict.json", swapc::verdict_report(q, c, o.factor, v));
    const auto md = swapc::verdict_markdown(q, c, o.factor, v);
    ctx.write_text("verdict.md", md);
    ctx.stdout_ << md;
    return json::object();
}

// ---- survey / report -------------------------------------------------------

struct SurveyOptions {
    std::string format = "md";
};

json run_survey(const SurveyOptions& o, Context& ctx) {
    if (o.format != "md" && o.format != "csv" && o.format != "json") {
        throw InvalidInput("--format must be md, csv or json");
    }
    const auto& rows = arl::builtin_survey();
    const auto md = arl::render_markdown(rows);
    const auto csv = arl::render_csv(rows);
    const auto j = arl::render_json(rows);
    ctx.write_text("survey.md", md);
    ctx.write_text("survey.csv", csv);
    ctx.write_json("survey.json", j);
    ctx.stdout_ << (o.format == "md" ? md : o.format == "csv" ? csv : j.dump(2) + "\n");
    return json::object();
}

struct ReportOptions {
    std::vector<std::string> measured;
};

json run_report(const ReportOptions& o, Context& ctx) {
    std::vector<arl::MeasuredRow> rows;
    for (const auto& path : o.measured) rows.push_back(arl::measured_row_from_json(read_json_file(path)));
    const auto& survey = arl::builtin_survey();
    const auto md = arl::render_markdown(survey, rows);
    ctx.write_text("report.md", md);
    ctx.write_json("report.json", arl::render_json(survey, rows));
    ctx.write_text("report.csv", arl::render_csv(survey));
    ctx.write_text("measured.csv", arl::render_measured_csv(rows));
    ctx.stdout_ << md;
    return json::object();
}

}  // namespace

void register_misc(CLI::App& root, Common& common, std::vector<Command>& commands) {
    {
        auto* sub = root.add_subcommand("compile", "Compile a circuit JSON file to a native gate set and topology");
        auto o = std::make_shared<CompileOptions>();
        sub->add_option("circuit", o->circuit, "Circuit JSON file");
        sub->add_option("--topology", o->topology, "linear, circular, grid_nn or all_to_all");
        sub->add_option("--natives", o->natives, "'default' or a kind list such as RZ,RY,CNOT");
        sub->add_option("--qubits", o->qubits, "Physical register size (0: circuit width)");
        add_common(sub, common, false);
        commands.push_back({sub, {"compile"}, false, [o](Context& ctx) { return run_compile(*o, ctx); }, {"circuit"}});
    }
    {
        auto* sub = root.add_subcommand("score", "SWaP-aware scores of one run");
        auto o = std::make_shared<ScoreOptions>();
        sub->add_option("--performance", o->performance, "Benchmark score P > 0");
        sub->add_option("--runtime", o->runtime, "Runtime R in seconds");
        sub->add_option("--device", o->device, "Device spec JSON (power and volume)");
        sub->add_option("--power", o->power, "Power W in watts");
        sub->add_option("--volume", o->volume, "Volume V in liters (enables score2)");
        add_common(sub, common, false);
        commands.push_back({sub, {"score"}, false, [o](Context& ctx) { return run_score(*o, ctx); }, {"performance", "runtime"}});
    }
    {
        auto* sub = root.add_subcommand("verdict", "Utility verdict for a quantum and a classical run outcome");
        auto o = std::make_shared<VerdictOptions>();
        sub->add_option("--quantum", o->quantum, "Quantum RunOutcome JSON");
        sub->add_option("--classical", o->classical, "Classical RunOutcome JSON");
        sub->add_option("--factor", o->factor, "Similarity factor f on volume, weight and cost");
        add_common(sub, common, false);
        commands.push_back({sub, {"verdict"}, false, [o](Context& ctx) { return run_verdict(*o, ctx); }, {"quantum", "classical"}});
    }
    {
        auto* sub = root.add_subcommand("survey", "Emit the built-in application survey");
        auto o = std::make_shared<SurveyOptions>();
        sub->add_option("--format", o->format, "Printed format: md, csv or json");
        add_common(sub, common, false);
        commands.push_back({sub, {"survey"}, false, [o](Context& ctx) { return run_survey(*o, ctx); }});
    }
    {
        auto* sub = root.add_subcommand("report", "Survey report with measured scaling rows");
        auto o = std::make_shared<ReportOptions>();
        sub->add_option("--measured", o->measured, "row.json files written by sweep");
        add_common(sub, common, false);
        commands.push_back({sub, {"report"}, false, [o](Context& ctx) { return run_report(*o, ctx); }});
    }
}

}  // namespace qutil::cli::detail
