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

#include <future>
#include <map>
#include <sstream>

#include "internal.hpp"
#include "qutil/algokit/ansatz.hpp"
#include "qutil/algokit/classifiers.hpp"
#include "qutil/algokit/dataset.hpp"
#include "qutil/algokit/kernel.hpp"
#include "qutil/algokit/qcbm.hpp"
#include "qutil/algokit/varqite.hpp"
#include "qutil/algokit/vqe.hpp"
#include "qutil/arlkit/report.hpp"
#include "qutil/cli/artifacts.hpp"
#include "qutil/error.hpp"
#include "qutil/profiler/scaling.hpp"
#include "qutil/profiler/table_check.hpp"
#include "qutil/qcompile/compiler.hpp"
#include "qutil/simcore/pauli_sum.hpp"
#include "qutil/simcore/rng.hpp"
#include "qutil/simcore/state_vector.hpp"

namespace qutil::cli::detail {

namespace {

struct SweepOptions {
    std::string app;
    std::string sizes;
    std::string variable;  // default: the app's primary variable
    std::size_t layers = 2;
    std::size_t qubits = 2;
    std::size_t points = 8;
    std::size_t iterations = 2;
    std::string encoder = "layered";
    double precision = 0.05;
    double tol = 0.05;
};

using Counts = std::map<std::string, double>;

/// Which variables each app can be swept over; the first is the default.
const std::map<std::string, std::vector<std::string>> kVariables = {
    {"vqe", {"N"}},  {"varqite", {"t"}},      {"qk", {"|T|", "N"}},
    {"qvc", {"|T|", "N"}}, {"re-uploading", {"|T|", "L"}}, {"qcbm", {"N"}},
};

std::size_t hea_linear_depth(std::size_t n, std::size_t layers) {
    const auto c = compile::compile(algo::build_hea_ansatz(n, layers), compile::NativeGateSet::defaults(),
                                    compile::Topology(compile::TopologyKind::Linear, n));
    return c.stats.native_depth;
}

algo::OptimizerConfig few_iterations(algo::OptimizerConfig base, std::size_t iterations) {
    base.max_iterations = iterations;
    return base;
}

/// Circuits per cost evaluation: the survey counts circuits per evaluation,
/// not per optimizer run, whose length depends on the parameter count.
double per_evaluation(const algo::Resources& r) {
    return r.objective_evaluations == 0 ? 0.0 : double(r.circuits) / double(r.objective_evaluations);
}

/// Measured counts for one size point. Every quantity is a deterministic
/// function of (options, size, seed).
Counts measure(const SweepOptions& o, const std::string& var, std::size_t size, std::uint64_t seed) {
    const std::string& app = o.app;
    if (app == "vqe") {
        algo::VqeProblem p{sim::transverse_field_ising(size), algo::build_hea_ansatz(size, o.layers),
                           algo::ShotConfig::exact_mode()};
        const auto r = algo::run_vqe(p, few_iterations({}, o.iterations), seed);
        return {{"circuits", double(r.circuits_per_evaluation)},
                {"depth", double(r.compiled_depth)},
                {"shots", double(algo::ShotConfig::for_precision(o.precision).shots)}};
    }
    if (app == "varqite") {
        const auto h = sim::transverse_field_ising(o.qubits);
        algo::VarQiteConfig cfg;
        cfg.steps = size;
        const auto r = algo::run_varqite(h, algo::build_hea_ansatz(o.qubits, o.layers), cfg, seed);
        return {{"circuits", double(r.circuit_evaluations)}};
    }
    if (app == "qk") {
        const bool by_points = var == "|T|";
        const auto data = by_points ? algo::make_blobs(size, 2, seed) : algo::make_random(o.points, size, seed);
        const algo::FeatureMap map{algo::parse_encoder_kind(o.encoder), 1, data.dimension()};
        const auto k = algo::quantum_kernel_matrix(data, map, {}, seed);
        return {{"circuits", double(k.circuits)}, {"depth", double(k.depth)}};
    }
    if (app == "qvc") {
        const bool by_points = var == "|T|";
        const auto data = by_points ? algo::make_blobs(size, 2, seed) : algo::make_blobs(o.points, size, seed);
        algo::QvcConfig cfg;
        cfg.layers = o.layers;
        cfg.optimizer = few_iterations(cfg.optimizer, o.iterations);
        const auto r = algo::run_qvc(data, cfg, seed);
        return {{"circuits", per_evaluation(r.trace.resources)}, {"depth", double(r.depth)}};
    }
    if (app == "re-uploading") {
        const bool by_points = var == "|T|";
        const auto data = algo::make_circles(by_points ? size : o.points, 0.6, seed);
        algo::ReuploadConfig cfg;
        cfg.layers = by_points ? o.layers : size;
        cfg.optimizer = few_iterations(cfg.optimizer, o.iterations);
        const auto r = algo::run_reuploading(data, cfg, seed);
        return {{"circuits", per_evaluation(r.trace.resources)}, {"depth", double(r.depth)}};
    }
    // qcbm
    algo::QcbmConfig cfg;
    cfg.layers = o.layers;
    cfg.optimizer = few_iterations(cfg.optimizer, o.iterations);
    const auto r = algo::run_qcbm(algo::TargetDistribution::uniform(size), cfg, seed);
    return {{"circuits", per_evaluation(r.trace.resources)},
            {"depth", double(hea_linear_depth(size, o.layers))},
            {"shots", double(algo::shots_to_resolve(size, o.tol))}};
}

void check_limits(const SweepOptions& o, const std::string& var, const std::vector<std::size_t>& sizes) {
    std::size_t lo = 1, hi = 1u << 20;
    if (var == "N") hi = o.app == "qcbm" ? algo::kMaxQcbmQubits : 12;
    if (var == "|T|") lo = 2, hi = 256;
    if (var == "t") hi = 10000;
    if (var == "L") hi = 64;
    for (auto s : sizes) {
        if (s < lo || s > hi) {
            throw SizeLimitError("size " + std::to_string(s) + " outside " + std::to_string(lo) + ".." +
                                 std::to_string(hi) + " for " + o.app + " over " + var);
        }
    }
}

std::string md_row(const arl::MeasuredCell& c) {
    std::ostringstream s;
    s << "| " << c.column << " | " << c.variable << " | " << c.expression << " | " << arl::to_string(c.expected)
      << " | " << (c.measured ? arl::to_string(*c.measured) : "-") << " | ";
    if (c.measured) s << c.r_squared;
    s << " | " << arl::to_string(c.status) << " |\n";
    return s.str();
}

json run_sweep(const SweepOptions& opt, Context& ctx) {
    SweepOptions o = opt;
    if (o.app == "reuploading") o.app = "re-uploading";
    const auto it = kVariables.find(o.app);
    if (it == kVariables.end()) {
        throw InvalidInput("unknown or non-sweepable app '" + o.app +
                           "' (expected vqe, varqite, qk, qvc, re-uploading or qcbm)");
    }
    const std::string var = o.variable.empty() ? it->second.front() : o.variable;
    if (std::find(it->second.begin(), it->second.end(), var) == it->second.end()) {
        throw InvalidInput("app '" + o.app + "' cannot be swept over '" + var + "'");
    }
    auto sizes = parse_sizes(o.sizes);
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    if (sizes.size() < 4) throw InvalidInput("a scaling fit needs at least 4 distinct sizes");
    check_limits(o, var, sizes);

    // Size points run concurrently; each writes its own file atomically.
    std::vector<std::future<Counts>> jobs;
    for (auto size : sizes) {
        jobs.push_back(std::async(std::launch::async, [&, size] {
            const auto seed = sim::substream_seed(ctx.seed, size);
            Counts c = measure(o, var, size, seed);
            write_json(ctx.out / "points" / ("size_" + std::to_string(size) + ".json"),
                       {{"app", o.app}, {"variable", var}, {"size", size}, {"seed", seed}, {"counts", c}});
            return c;
        }));
    }
    std::vector<Counts> counts;
    for (auto& j : jobs) counts.push_back(j.get());
    for (auto size : sizes) ctx.artifacts.push_back("points/size_" + std::to_string(size) + ".json");

    std::map<std::string, prof::ScalingFit> fits;
    json fits_json = json::object();
    std::vector<Series> series;
    for (const auto& [column, _] : counts.front()) {
        std::vector<prof::Sample> samples;
        Series s{column, {}};
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            samples.push_back({double(sizes[i]), counts[i].at(column)});
            s.points.emplace_back(double(sizes[i]), counts[i].at(column));
        }
        fits[column] = prof::fit_scaling(samples, var);
        fits_json[column] = prof::to_json(fits[column]);
        series.push_back(std::move(s));
    }
    const auto row = prof::verify_table_row(o.app, fits);

    json points = json::array();
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        points.push_back({{"size", sizes[i]}, {"seed", sim::substream_seed(ctx.seed, sizes[i])}, {"counts", counts[i]}});
    }
    ctx.write_json("sweep.json", {{"app", o.app}, {"variable", var}, {"points", points}, {"fits", fits_json}});
    ctx.write_json("row.json", arl::to_json(row));
    ctx.write_text("fit.svg", plot_svg(o.app + " resources vs " + var, var, "count", series, true));

    std::string md = "# sweep " + o.app + " over " + var + "\n\n| column | variable | tabulated | expected | measured "
                     "| R^2 | status |\n|---|---|---|---|---|---|---|\n";
    for (const auto& c : row.cells) md += md_row(c);
    md += "\nMeasured classes come from the fits in sweep.json; the plot is fit.svg.\n";
    ctx.write_text("summary.md", md);
    ctx.stdout_ << md;

    json seeds = {{"base", ctx.seed}};
    for (auto s : sizes) seeds["size_" + std::to_string(s)] = sim::substream_seed(ctx.seed, s);
    return seeds;
}

}  // namespace

void register_sweep(CLI::App& root, Common& common, std::vector<Command>& commands) {
    auto* sweep = root.add_subcommand("sweep", "Measure resource scaling over sizes and check the survey row");
    auto o = std::make_shared<SweepOptions>();
    sweep->add_option("app", o->app, "vqe, varqite, qk, qvc, re-uploading or qcbm");
    sweep->add_option("--sizes", o->sizes, "Sizes, e.g. 4,6,8,10,12 or 2..5");
    sweep->add_option("--variable", o->variable, "Swept symbol: N, t, |T| or L (default per app)");
    sweep->add_option("--layers", o->layers, "Ansatz layers when not swept");
    sweep->add_option("--qubits", o->qubits, "Register size when not swept");
    sweep->add_option("--points", o->points, "Dataset size when not swept");
    sweep->add_option("--iterations", o->iterations, "Optimizer iterations per point");
    sweep->add_option("--encoder", o->encoder, "Kernel feature map for qk");
    sweep->add_option("--precision", o->precision, "Target precision for shot columns");
    sweep->add_option("--tol", o->tol, "QCBM TVD tolerance for shots-to-resolve");
    add_common(sweep, common, true);
    commands.push_back({sweep, {"sweep"}, true, [o](Context& ctx) { return run_sweep(*o, ctx); }, {"app", "sizes"}});
}

}  // namespace qutil::cli::detail
