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

#include <chrono>
#include <cmath>
#include <sstream>

#include "internal.hpp"
#include "qutil/algokit/ansatz.hpp"
#include "qutil/algokit/classifiers.hpp"
#include "qutil/algokit/dataset.hpp"
#include "qutil/algokit/hamiltonian.hpp"
#include "qutil/algokit/kernel.hpp"
#include "qutil/algokit/qcbm.hpp"
#include "qutil/algokit/varqite.hpp"
#include "qutil/algokit/vqe.hpp"
#include "qutil/cli/artifacts.hpp"
#include "qutil/error.hpp"
#include "qutil/profiler/mirror.hpp"
#include "qutil/profiler/profile.hpp"
#include "qutil/simcore/pauli_sum.hpp"
#include "qutil/simcore/rng.hpp"

namespace qutil::cli::detail {

namespace {

using Clock = std::chrono::steady_clock;

/// Flags of `bench run`. Zero for iterations/optimizer means "app default".
struct BenchOptions {
    std::string app;
    std::string hamiltonian;
    std::size_t qubits = 2;
    double field = 1.0;
    std::size_t layers = 2;
    bool exact = false;
    std::uint64_t shots = 0;
    double precision = 0.0;
    std::string optimizer;
    std::size_t iterations = 0;
    double p1 = 0.0;
    double p2 = 0.0;
    std::string dataset;
    std::size_t points = 16;
    std::string encoder = "angle";
    std::size_t encoder_layers = 1;
    double lambda = 1e-3;
    double dt = 0.1;
    std::size_t steps = 50;
    std::string target = "uniform";
    std::string sizes = "2..8";
};

const std::vector<std::string> kApps = {"vqe", "varqite", "qk", "qvc", "re-uploading", "qcbm", "mirror"};

std::string canonical_app(const std::string& name) {
    if (name == "reuploading") return "re-uploading";
    for (const auto& a : kApps) {
        if (a == name) return a;
    }
    std::string list;
    for (const auto& a : kApps) list += (list.empty() ? "" : ", ") + a;
    throw InvalidInput("unknown app '" + name + "' (expected one of: " + list + ")");
}

struct Mode {
    bool exact = true;
    std::uint64_t shots = 0;
};

/// --exact, --shots and --precision are mutually exclusive; with none of
/// them the app default applies.
Mode resolve_mode(const BenchOptions& o, Mode fallback) {
    const int given = int(o.exact) + int(o.shots > 0) + int(o.precision > 0);
    if (given > 1) throw InvalidInput("--exact, --shots and --precision are mutually exclusive");
    if (o.exact) return {true, 0};
    if (o.shots > 0) return {false, o.shots};
    if (o.precision > 0) return {false, algo::ShotConfig::for_precision(o.precision).shots};
    return fallback;
}

algo::OptimizerConfig optimizer_config(const BenchOptions& o, algo::OptimizerConfig base) {
    if (!o.optimizer.empty()) base.kind = algo::parse_optimizer_kind(o.optimizer);
    if (o.iterations > 0) base.max_iterations = o.iterations;
    return base;
}

std::optional<sim::NoiseModel> noise_of(const BenchOptions& o) {
    sim::NoiseModel n{o.p1, o.p2};
    n.validate();
    if (n.is_ideal()) return std::nullopt;
    return n;
}

sim::PauliSum load_hamiltonian(const BenchOptions& o) {
    if (o.hamiltonian.empty()) return sim::transverse_field_ising(o.qubits, o.field);
    return sim::PauliSum::parse(read_file(o.hamiltonian));
}

algo::LabeledDataset load_or_make(const BenchOptions& o, std::uint64_t seed, bool circles) {
    if (!o.dataset.empty()) return algo::load_dataset_csv(o.dataset);
    return circles ? algo::make_circles(o.points, 0.6, seed) : algo::make_blobs(o.points, 2, seed);
}

json trace_json(const algo::TrainingTrace& t) {
    json entries = json::array();
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        entries.push_back({{"iteration", i}, {"objective", t.entries[i].objective},
                           {"param_norm", t.entries[i].param_norm}});
    }
    const auto& r = t.resources;
    return {{"entries", entries},
            {"final_params", t.final_params},
            {"converged", t.converged},
            {"diagnostics", t.diagnostics},
            {"resources",
             {{"circuits", r.circuits},
              {"shots", r.shots},
              {"objective_evaluations", r.objective_evaluations},
              {"max_depth", r.max_depth},
              {"sum_depth", r.sum_depth}}}};
}

std::string trace_svg(const std::string& title, const algo::TrainingTrace& t, const std::string& y_label) {
    Series s{"objective", {}};
    for (std::size_t i = 0; i < t.entries.size(); ++i) s.points.emplace_back(double(i), t.entries[i].objective);
    return plot_svg(title, "iteration", y_label, {s});
}

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(10);
    s << v;
    return s.str();
}

/// Markdown key/value table from a flat list.
std::string kv_table(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::string md = "| quantity | value |\n|---|---|\n";
    for (const auto& [k, v] : rows) md += "| " + k + " | " + v + " |\n";
    return md;
}

struct BenchOutput {
    json result;
    std::vector<std::pair<std::string, std::string>> summary;
    std::string svg;
    std::string svg_name = "trace.svg";
};

BenchOutput bench_vqe(const BenchOptions& o, std::uint64_t seed, prof::EventLog& log) {
    const auto h = load_hamiltonian(o);
    const Mode mode = resolve_mode(o, {true, 0});
    algo::VqeProblem problem{h, algo::build_hea_ansatz(h.num_qubits(), o.layers),
                             mode.exact ? algo::ShotConfig::exact_mode() : algo::ShotConfig::with_shots(mode.shots)};
    const auto r = algo::run_vqe(problem, optimizer_config(o, {}), seed, &log);
    BenchOutput out;
    out.result = {{"hamiltonian", h.to_text()},
                  {"num_qubits", h.num_qubits()},
                  {"num_terms", h.size()},
                  {"num_params", problem.ansatz.num_params()},
                  {"final_energy", r.final_energy},
                  {"final_exact_energy", r.final_exact_energy},
                  {"standard_error", r.standard_error},
                  {"circuits_per_evaluation", r.circuits_per_evaluation},
                  {"compiled_depth", r.compiled_depth},
                  {"trace", trace_json(r.trace)}};
    out.summary = {{"qubits", std::to_string(h.num_qubits())},
                   {"final energy", fmt(r.final_energy)},
                   {"standard error", fmt(r.standard_error)}};
    if (h.num_qubits() <= algo::kMaxDenseQubits) {
        const double e0 = algo::exact_ground_energy(h);
        out.result["exact_ground_energy"] = e0;
        out.result["abs_error"] = std::abs(r.final_exact_energy - e0);
        out.summary.emplace_back("exact ground energy", fmt(e0));
        out.summary.emplace_back("abs error vs exact", fmt(std::abs(r.final_exact_energy - e0)));
    }
    out.summary.emplace_back("circuits per evaluation", std::to_string(r.circuits_per_evaluation));
    out.summary.emplace_back("compiled depth (linear)", std::to_string(r.compiled_depth));
    out.svg = trace_svg("VQE energy", r.trace, "energy");
    return out;
}

BenchOutput bench_varqite(const BenchOptions& o, std::uint64_t seed, prof::EventLog& log) {
    const auto h = load_hamiltonian(o);
    const auto ansatz = algo::build_hea_ansatz(h.num_qubits(), o.layers);
    algo::VarQiteConfig cfg;
    cfg.dt = o.dt;
    cfg.steps = o.steps;
    cfg.regularization = o.lambda;
    const auto r = algo::run_varqite(h, ansatz, cfg, seed, &log);
    const auto q = ansatz.num_params();
    BenchOutput out;
    out.result = {{"hamiltonian", h.to_text()},
                  {"num_qubits", h.num_qubits()},
                  {"num_params", q},
                  {"final_energy", r.trace.final_objective()},
                  {"circuit_evaluations", r.circuit_evaluations},
                  {"expected_circuit_evaluations", algo::varqite_circuit_count(r.steps_completed, q, h.size())},
                  {"steps_completed", r.steps_completed},
                  {"rejected_attempts", r.rejected_attempts},
                  {"stalled", r.stalled},
                  {"trace", trace_json(r.trace)}};
    out.summary = {{"final energy", fmt(r.trace.final_objective())},
                   {"steps completed", std::to_string(r.steps_completed)},
                   {"circuit evaluations", std::to_string(r.circuit_evaluations)},
                   {"stalled", r.stalled ? "yes" : "no"}};
    if (h.num_qubits() <= algo::kMaxDenseQubits) {
        const double e0 = algo::exact_ground_energy(h);
        out.result["exact_ground_energy"] = e0;
        out.summary.emplace_back("exact ground energy", fmt(e0));
    }
    out.svg = trace_svg("VarQiTE energy", r.trace, "energy");
    return out;
}

json matrix_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

BenchOutput bench_qk(const BenchOptions& o, std::uint64_t seed, prof::EventLog& log) {
    const auto data = load_or_make(o, sim::substream_seed(seed, 1), false);
    data.validate(true);
    const Mode mode = resolve_mode(o, {true, 0});
    const algo::FeatureMap map{algo::parse_encoder_kind(o.encoder), o.encoder_layers, data.dimension()};
    const auto k = algo::quantum_kernel_matrix(data, map, {mode.exact, mode.shots}, seed, &log);
    const auto clf = algo::train_kernel_classifier(k.matrix, data.labels, o.lambda);
    const auto baseline = algo::train_kernel_classifier(algo::classical_angle_kernel(data), data.labels, o.lambda);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k.matrix);
    BenchOutput out;
    out.result = {{"points", data.size()},
                  {"dimension", data.dimension()},
                  {"encoder", std::string(algo::to_string(map.kind))},
                  {"kernel", matrix_json(k.matrix)},
                  {"kernel_min_eigenvalue", es.eigenvalues().minCoeff()},
                  {"circuits", k.circuits},
                  {"depth", k.depth},
                  {"training_accuracy", clf.training_accuracy},
                  {"classical_baseline_accuracy", baseline.training_accuracy}};
    out.summary = {{"points", std::to_string(data.size())},
                   {"kernel circuits", std::to_string(k.circuits)},
                   {"circuit depth", std::to_string(k.depth)},
                   {"training accuracy", fmt(clf.training_accuracy)},
                   {"classical baseline accuracy", fmt(baseline.training_accuracy)}};
    Series s{"eigenvalue", {}};
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) s.points.emplace_back(double(i), es.eigenvalues()(i));
    out.svg = plot_svg("Kernel spectrum", "index", "eigenvalue", {s});
    out.svg_name = "spectrum.svg";
    return out;
}

BenchOutput classifier_output(const std::string& title, const algo::LabeledDataset& data,
                              const algo::ClassifierResult& r) {
    BenchOutput out;
    out.result = {{"points", data.size()},
                  {"dimension", data.dimension()},
                  {"accuracy", r.accuracy},
                  {"untrained_accuracy", r.untrained_accuracy},
                  {"predictions", r.predictions},
                  {"depth", r.depth},
                  {"trace", trace_json(r.trace)}};
    out.summary = {{"points", std::to_string(data.size())},
                   {"training accuracy", fmt(r.accuracy)},
                   {"untrained accuracy", fmt(r.untrained_accuracy)},
                   {"circuit depth", std::to_string(r.depth)},
                   {"circuits executed", std::to_string(r.trace.resources.circuits)}};
    out.svg = trace_svg(title, r.trace, "loss");
    return out;
}

BenchOutput bench_qvc(const BenchOptions& o, std::uint64_t seed, prof::EventLog& log) {
    const auto data = load_or_make(o, sim::substream_seed(seed, 1), false);
    algo::QvcConfig cfg;
    cfg.layers = o.layers;
    cfg.optimizer = optimizer_config(o, cfg.optimizer);
    cfg.noise = noise_of(o);
    if (o.exact && cfg.noise) throw InvalidInput("--exact conflicts with a noise model");
    if (o.shots > 0) cfg.shots = o.shots;
    return classifier_output("QVC loss", data, algo::run_qvc(data, cfg, seed, &log));
}

BenchOutput bench_reuploading(const BenchOptions& o, std::uint64_t seed, prof::EventLog& log) {
    const auto data = load_or_make(o, sim::substream_seed(seed, 1), true);
    algo::ReuploadConfig cfg;
    cfg.layers = o.layers;
    cfg.optimizer = optimizer_config(o, cfg.optimizer);
    return classifier_output("Re-uploading loss", data, algo::run_reuploading(data, cfg, seed, &log, "re-uploading"));
}

algo::TargetDistribution parse_target(const std::string& text, std::size_t qubits) {
    if (text == "uniform") return algo::TargetDistribution::uniform(qubits);
    if (text.starts_with("point:")) return algo::TargetDistribution::point_mass(text.substr(6));
    throw InvalidInput("target must be 'uniform' or 'point:<bits>', got '" + text + "'");
}

BenchOutput bench_qcbm(const BenchOptions& o, std::uint64_t seed, prof::EventLog& log) {
    const auto target = parse_target(o.target, o.qubits);
    algo::QcbmConfig cfg;
    cfg.layers = o.layers;
    cfg.optimizer = optimizer_config(o, cfg.optimizer);
    const Mode mode = resolve_mode(o, {true, 0});
    cfg.shots = mode.exact ? 0 : mode.shots;
    const auto r = algo::run_qcbm(target, cfg, seed, &log);
    BenchOutput out;
    out.result = {{"num_qubits", target.num_qubits},
                  {"target", target.probabilities},
                  {"final_tvd", r.final_tvd},
                  {"trace", trace_json(r.trace)}};
    out.summary = {{"qubits", std::to_string(target.num_qubits)},
                   {"final TVD", fmt(r.final_tvd)},
                   {"circuits executed", std::to_string(r.trace.resources.circuits)},
                   {"shots consumed", std::to_string(r.trace.resources.shots)}};
    out.svg = trace_svg("QCBM loss", r.trace, "TVD");
    return out;
}

BenchOutput bench_mirror(const BenchOptions& o, std::uint64_t seed, double& successes) {
    const auto sizes = parse_sizes(o.sizes);
    const Mode mode = resolve_mode(o, {false, 1000});
    if (mode.exact) throw InvalidInput("mirror benchmarks are sampled; use --shots");
    const auto results = prof::mirror_benchmark(prof::hea_family(o.layers, sim::substream_seed(seed, 1)), sizes,
                                                noise_of(o).value_or(sim::NoiseModel{}), mode.shots, seed);
    BenchOutput out;
    json rows = json::array();
    Series s{"success", {}};
    successes = 0;
    for (const auto& r : results) {
        rows.push_back(prof::to_json(r));
        s.points.emplace_back(double(r.size), r.success_probability);
        successes += r.success_probability * double(r.shots);
        out.summary.emplace_back("N = " + std::to_string(r.size) + " (mirror depth " +
                                     std::to_string(r.mirror_depth) + ")",
                                 fmt(r.success_probability) + " +- " + fmt(r.standard_error));
    }
    out.result = {{"results", rows}};
    out.svg = plot_svg("Mirror-circuit success", "qubits", "success probability", {s});
    out.svg_name = "mirror.svg";
    return out;
}

json run_bench(const BenchOptions& opt, Context& ctx) {
    BenchOptions o = opt;
    o.app = canonical_app(o.app);
    if (o.qubits == 0 || o.qubits > sim::kMaxQubits) {
        throw SizeLimitError("--qubits must be in 1.." + std::to_string(sim::kMaxQubits));
    }
    prof::EventLog log;
    const auto t0 = Clock::now();
    double successes = 0;
    BenchOutput b;
    if (o.app == "vqe") b = bench_vqe(o, ctx.seed, log);
    else if (o.app == "varqite") b = bench_varqite(o, ctx.seed, log);
    else if (o.app == "qk") b = bench_qk(o, ctx.seed, log);
    else if (o.app == "qvc") b = bench_qvc(o, ctx.seed, log);
    else if (o.app == "re-uploading") b = bench_reuploading(o, ctx.seed, log);
    else if (o.app == "qcbm") b = bench_qcbm(o, ctx.seed, log);
    else b = bench_mirror(o, ctx.seed, successes);
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();

    json runtime = {{"wall_seconds", seconds}};
    if (o.app == "mirror" && seconds > 0) runtime["successes_per_second"] = successes / seconds;
    json result = {{"app", o.app}, {"seed", ctx.seed}, {"result", b.result}, {"runtime", runtime}};
    if (o.app != "mirror") result["profile"] = prof::to_json(prof::profile(log));
    ctx.write_json("result.json", result);
    ctx.write_text(b.svg_name, b.svg);

    std::string md = "# bench run " + o.app + "\n\nSeed " + std::to_string(ctx.seed) + ".\n\n" + kv_table(b.summary) +
                     "\nWall-clock runtime: " + fmt(seconds) + " s.\n\nPlot: [" + b.svg_name + "](" + b.svg_name +
                     ")\n";
    ctx.write_text("summary.md", md);
    ctx.stdout_ << md;
    return {{"base", ctx.seed}, {"data", sim::substream_seed(ctx.seed, 1)}};
}

}  // namespace

void register_bench(CLI::App& root, Common& common, std::vector<Command>& commands) {
    auto* bench = root.add_subcommand("bench", "Run one application end to end");
    bench->require_subcommand(1);
    auto* run = bench->add_subcommand("run", "Run <app>: vqe, varqite, qk, qvc, re-uploading, qcbm or mirror");
    auto o = std::make_shared<BenchOptions>();
    run->add_option("app", o->app, "Application id");
    run->add_option("--hamiltonian", o->hamiltonian, "PauliSum text file (default: TFIM chain of --qubits sites)");
    run->add_option("--qubits", o->qubits, "Register size for generated problems");
    run->add_option("--field", o->field, "Transverse field g of the generated TFIM chain");
    run->add_option("--layers", o->layers, "Ansatz / classifier / mirror-family layers");
    run->add_flag("--exact", o->exact, "Exact expectation values");
    run->add_option("--shots", o->shots, "Shots per circuit");
    run->add_option("--precision", o->precision, "Target precision eps; shots = ceil(1/eps^2)");
    run->add_option("--optimizer", o->optimizer, "coordinate_descent or spsa (default: app default)");
    run->add_option("--iterations", o->iterations, "Optimizer iterations (0: app default)");
    run->add_option("--noise-p1", o->p1, "Depolarizing probability after 1-qubit gates");
    run->add_option("--noise-p2", o->p2, "Depolarizing probability after multi-qubit gates");
    run->add_option("--dataset", o->dataset, "CSV dataset with a 'label' column (default: synthetic)");
    run->add_option("--points", o->points, "Synthetic dataset size");
    run->add_option("--encoder", o->encoder, "Kernel feature map: angle, layered or identity");
    run->add_option("--encoder-layers", o->encoder_layers, "Layers of the layered feature map");
    run->add_option("--lambda", o->lambda, "Ridge (qk) or VarQiTE regularization");
    run->add_option("--dt", o->dt, "VarQiTE time step");
    run->add_option("--steps", o->steps, "VarQiTE steps");
    run->add_option("--target", o->target, "QCBM target: uniform or point:<bits>");
    run->add_option("--sizes", o->sizes, "Mirror sizes, e.g. 2..8 or 2,4,6");
    add_common(run, common, true);
    commands.push_back({run, {"bench", "run"}, true, [o](Context& ctx) { return run_bench(*o, ctx); }, {"app"}});
}

}  // namespace qutil::cli::detail
