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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each check uses an oracle independent of the code under test
// where one exists (closed forms, direct statevector products, eigenvalues).

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli_harness.hpp"
#include "dense_oracle.hpp"
#include "qutil/algokit/ansatz.hpp"
#include "qutil/algokit/dataset.hpp"
#include "qutil/algokit/hamiltonian.hpp"
#include "qutil/algokit/kernel.hpp"
#include "qutil/algokit/qcbm.hpp"
#include "qutil/algokit/varqite.hpp"
#include "qutil/algokit/vqe.hpp"
#include "qutil/arlkit/assessment.hpp"
#include "qutil/profiler/mirror.hpp"
#include "qutil/profiler/scaling.hpp"
#include "qutil/profiler/table_check.hpp"
#include "qutil/qcompile/compiler.hpp"
#include "qutil/simcore/random_circuit.hpp"
#include "qutil/simcore/rng.hpp"
#include "qutil/simcore/simulator.hpp"
#include "qutil/swapc/swapc.hpp"

using namespace qutil;
using namespace qutil::testing;

namespace {

/// Collects failed sub-checks; a criterion passes when none failed.
struct Check {
    std::vector<std::string> failures;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

using Criterion = std::function<void(Check&)>;

bool close_rel(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

// --- 1 -------------------------------------------------------------------

void survey_reproduction(Check& c) {
    ScratchDir dir("acc_survey");
    const auto r = run_cli({"survey", "--format", "csv", "-o", dir.sub("out")});
    c.expect(r.code == 0, "survey exit code " + std::to_string(r.code));
    c.expect(r.out == slurp(std::string(QUTIL_TEST_GOLDEN_DIR) + "/survey.csv"), "csv differs from golden");
    const auto& rows = arl::builtin_survey();
    c.expect(rows.size() == 11, "row count");
    for (const auto& row : rows) {
        const auto want = row.id == "vqe" ? "3" : "2";
        c.expect(arl::to_string(row.level) == want, row.id + " ARL " + std::string(arl::to_string(row.level)));
    }
    c.detail << rows.size() << " rows";
}

// --- 2 -------------------------------------------------------------------

void score_formulas(Check& c) {
    c.expect(swapc::score1(1000, 10, 50) == 2.0, "score1 example");
    c.expect(swapc::score2(1000, 2, 10, 50) == 1.0, "score2 example");
    sim::Rng rng(2026);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
        const double p = rng.uniform(0.1, 1e6), v = rng.uniform(0.1, 1e3), t = rng.uniform(1e-3, 1e4),
                     w = rng.uniform(1, 1e5), k = rng.uniform(0.01, 100);
        const double s1 = swapc::score1(p, t, w), s2 = swapc::score2(p, v, t, w);
        // Degree +1 in performance, -1 in each denominator factor.
        bad += !close_rel(swapc::score1(k * p, t, w), k * s1, 1e-12);
        bad += !close_rel(swapc::score1(p, k * t, w), s1 / k, 1e-12);
        bad += !close_rel(swapc::score1(p, t, k * w), s1 / k, 1e-12);
        bad += !close_rel(swapc::score2(k * p, v, t, w), k * s2, 1e-12);
        bad += !close_rel(swapc::score2(p, k * v, t, w), s2 / k, 1e-12);
        bad += !close_rel(swapc::score2(p, v, k * t, w), s2 / k, 1e-12);
        bad += !close_rel(swapc::score2(p, v, t, k * w), s2 / k, 1e-12);
        bad += !close_rel(s2, s1 / v, 1e-12);
    }
    c.expect(bad == 0, std::to_string(bad) + " homogeneity violations");
    c.detail << "1000 tuples";
}

// --- 3 -------------------------------------------------------------------

sim::PauliSum random_hamiltonian(std::size_t n, sim::Rng& rng) {
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    std::vector<sim::PauliTerm> terms;
    const std::size_t count = 2 + rng.below(2 * n);
    for (std::size_t t = 0; t < count; ++t) {
        std::string word(n, 'I');
        for (auto& ch : word) ch = kLetters[rng.below(4)];
        terms.push_back({rng.uniform(-1, 1), word});
    }
    return sim::PauliSum(n, terms);
}

void vqe_correctness(Check& c) {
    const auto h = sim::PauliSum::parse(slurp(data_file("hamiltonians/tfim2.txt")));
    const algo::VqeProblem problem{h, algo::build_hea_ansatz(2, 2), algo::ShotConfig::exact_mode()};
    const auto r = algo::run_vqe(problem, {}, 42);
    // -Z0Z1 - X0 - X1: the even-parity block [[-1, -2], [-2, 1]] has eigenvalue -sqrt(5).
    const double err = std::abs(r.final_energy + std::sqrt(5.0));
    c.expect(err < 1e-3, "TFIM2 error " + std::to_string(err));

    // Variational bound: every energy a run visits stays above the ground
    // energy of a Kronecker-product matrix diagonalised with Eigen.
    sim::Rng rng(7);
    double worst = -1e300;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const std::size_t n = 1 + seed % 6;
        const auto ham = random_hamiltonian(n, rng);
        const double e0 = Eigen::SelfAdjointEigenSolver<oracle::Mat>(oracle::pauli_sum_matrix(ham)).eigenvalues().minCoeff();
        const algo::VqeProblem p{ham, algo::build_hea_ansatz(n, 2), algo::ShotConfig::exact_mode()};
        const auto run = algo::run_vqe(p, {.max_iterations = 5}, seed);
        for (const auto& e : run.trace.entries) worst = std::max(worst, e0 - e.objective);
        worst = std::max(worst, e0 - run.final_exact_energy);
    }
    c.expect(worst <= 1e-9, "bound violated by " + std::to_string(worst));
    c.detail << "|E+sqrt5|=" << err << ", 50 seeds, max(E0-E)=" << worst;
}

// --- 4 -------------------------------------------------------------------

void varqite(Check& c) {
    sim::Circuit ry(1, 1);
    ry.add(sim::Gate::parametric(sim::GateKind::RY, 0, 0));
    algo::VarQiteConfig cfg{.dt = 0.1, .steps = 100};
    cfg.initial_params = std::vector<double>{std::numbers::pi / 2};
    const auto z = algo::run_varqite(sim::PauliSum(1, {{1.0, "Z"}}), ry, cfg, 1);
    c.expect(std::abs(z.trace.final_objective() + 1.0) < 1e-3, "H=Z did not reach -1");

    const auto h = sim::transverse_field_ising(2);
    const auto ansatz = algo::build_hea_ansatz(2, 2);
    const auto r = algo::run_varqite(h, ansatz, {.dt = 0.05, .steps = 60}, 3);
    for (std::size_t i = 1; i < r.trace.entries.size(); ++i) {
        c.expect(r.trace.entries[i].objective <= r.trace.entries[i - 1].objective + 1e-9,
                 "energy rose at step " + std::to_string(i));
    }
    const std::uint64_t t = r.steps_completed, q = ansatz.num_params(), p = h.size();
    c.expect(r.circuit_evaluations == t * (q * (q + 1) / 2 + q * p), "circuit accounting");
    c.expect(z.circuit_evaluations == 100 * (1 + 1), "circuit accounting, 1 qubit");
    c.detail << "E(Z)=" << z.trace.final_objective() << ", TFIM2 " << t << " steps";
}

// --- 5 -------------------------------------------------------------------

void compiler_soundness(Check& c) {
    const compile::TopologyKind kinds[] = {compile::TopologyKind::Linear, compile::TopologyKind::Circular,
                                           compile::TopologyKind::GridNN, compile::TopologyKind::AllToAll};
    const auto natives = compile::NativeGateSet::defaults();
    std::size_t compiled = 0, swaps = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const std::size_t n = 2 + seed % 5;
        const auto circ = sim::random_circuit(n, 1 + seed % 20, seed);
        for (auto kind : kinds) {
            const compile::Topology topo(kind, n);
            const auto out = compile::compile(circ, natives, topo);
            const std::string tag = "seed " + std::to_string(seed) + " " + std::string(compile::to_string(kind));
            c.expect(compile::verify_equivalence(circ, out.circuit, out.qubit_map), tag + " not equivalent");
            c.expect(compile::count_nonadjacent(out.circuit, topo) == 0, tag + " non-adjacent gate");
            for (const auto& g : out.circuit.gates()) c.expect(natives.contains(g.kind), tag + " non-native gate");
            ++compiled;
            swaps += out.stats.swap_inserted;
        }
    }
    c.detail << compiled << " compilations, " << swaps << " swaps";
}

// --- 6 -------------------------------------------------------------------

void scaling_fits(Check& c) {
    // 25 each of constant, linear, quadratic and exponential, with random
    // sizes and positive coefficients. Sizes span at least a factor of 2:
    // over narrower ranges a quadratic with lower-order terms can sit within
    // the fit margin of an affine law.
    sim::Rng rng(606);
    const std::vector<arl::Growth> classes = {arl::Growth::constant(), arl::Growth::polynomial(1),
                                              arl::Growth::polynomial(2), arl::Growth::exponential()};
    int correct = 0;
    for (int i = 0; i < 100; ++i) {
        const auto want = classes[i % 4];
        const double start = 1 + double(rng.below(3)), step = 1 + double(rng.below(3));
        const std::size_t m = 4 + rng.below(5);
        const double a = rng.uniform(0.5, 5), b = rng.uniform(0, 3), off = rng.uniform(0, 5);
        const double base = rng.uniform(1.5, 3);
        std::vector<prof::Sample> s;
        for (std::size_t k = 0; k < m; ++k) {
            const double n = start + step * double(k);
            double y = 0;
            switch (i % 4) {
                case 0: y = a * 10; break;
                case 1: y = a * (n + off); break;
                case 2: y = a * (n * n + b * n + off); break;
                default: y = a * std::pow(base, n); break;
            }
            s.push_back({n, y});
        }
        const auto fit = prof::fit_scaling(s);
        if (fit.best_class == want) {
            ++correct;
        } else {
            c.failures.push_back("case " + std::to_string(i) + " want " + arl::to_string(want) + " got " +
                                 arl::to_string(fit.best_class));
        }
    }

    std::vector<prof::Sample> depth;
    for (std::size_t n : {4u, 6u, 8u, 10u, 12u}) {
        const auto out = compile::compile(algo::build_hea_ansatz(n, 2), compile::NativeGateSet::defaults(),
                                          compile::Topology(compile::TopologyKind::Linear, n));
        depth.push_back({double(n), double(out.stats.native_depth)});
    }
    const auto fit = prof::fit_scaling(depth);
    const auto row = prof::verify_table_row("vqe", {{"depth", fit}});
    const auto& cell = row.cells.at(0);
    for (const auto& cl : row.cells) {
        if (cl.column == "depth") {
            c.expect(cl.status == arl::CellStatus::Match,
                     "HEA depth " + std::string(arl::to_string(cl.status)) + " vs " + cl.expression);
        }
    }
    c.detail << correct << "/100 synthetic, HEA depth " << arl::to_string(fit.best_class) << " vs "
             << cell.expression;
}

// --- 7 -------------------------------------------------------------------

void kernel_properties(Check& c) {
    double sym = 0, diag = 0, min_eig = 1e300, agree = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const std::size_t dim = 1 + seed % 4;
        const auto data = algo::make_random(6, dim, seed);
        const algo::FeatureMap map{.kind = seed % 2 ? algo::EncoderKind::Layered : algo::EncoderKind::Angle,
                                   .layers = 1 + seed % 3};
        const auto k = algo::quantum_kernel_matrix(data, map, {}, seed);
        c.expect(k.circuits == 6 * 5 / 2, "circuit count " + std::to_string(k.circuits));
        sym = std::max(sym, (k.matrix - k.matrix.transpose()).cwiseAbs().maxCoeff());
        diag = std::max(diag, (k.matrix.diagonal().array() - 1.0).abs().maxCoeff());
        min_eig = std::min(min_eig, Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(k.matrix).eigenvalues().minCoeff());
        std::vector<sim::StateVector> states;
        for (const auto& x : data.features) states.push_back(sim::run_statevector(map.circuit(x)));
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) {
                std::complex<double> ip = 0;
                const auto a = states[i].amplitudes(), b = states[j].amplitudes();
                for (std::size_t x = 0; x < a.size(); ++x) ip += std::conj(a[x]) * b[x];
                agree = std::max(agree, std::abs(std::norm(ip) - k.matrix(i, j)));
            }
        }
    }
    c.expect(sym <= 1e-12, "asymmetry " + std::to_string(sym));
    c.expect(diag <= 1e-12, "diagonal deviation " + std::to_string(diag));
    c.expect(min_eig >= -1e-9, "min eigenvalue " + std::to_string(min_eig));
    c.expect(agree <= 1e-10, "statevector disagreement " + std::to_string(agree));
    c.detail << "20 datasets, min eigenvalue " << min_eig << ", max |K - |<a|b>|^2| " << agree;
}

// --- 8 -------------------------------------------------------------------

void mirror_benchmark(Check& c) {
    const std::vector<std::size_t> sizes = {2, 3, 4, 5, 6, 7, 8};
    const std::uint64_t shots = 2000;
    for (const auto& r : prof::mirror_benchmark(prof::hea_family(2, 11), sizes, {}, shots, 5)) {
        // Expected success 1, so the 5 sigma binomial band has zero width.
        const double sigma = std::sqrt(1.0 * (1 - 1.0) / double(shots));
        c.expect(std::abs(r.success_probability - 1.0) <= 5 * sigma,
                 "N=" + std::to_string(r.size) + " success " + std::to_string(r.success_probability));
    }
    const std::size_t four[] = {4};
    double previous = 1.0;
    c.detail << "noisy:";
    for (std::size_t layers : {1u, 3u, 6u, 12u}) {
        const auto r = prof::mirror_benchmark(prof::hea_family(layers, 2), four, {.p1 = 0.005, .p2 = 0.005}, 4000, 9);
        c.expect(r[0].success_probability < previous, "not decreasing at " + std::to_string(layers) + " layers");
        previous = r[0].success_probability;
        c.detail << " d=" << r[0].depth << ":" << r[0].success_probability;
    }
}

// --- 9 -------------------------------------------------------------------

swapc::DeviceSpec rack(const std::string& name, double volume) {
    return {.name = name, .power_watts = 1000, .volume_liters = volume, .weight_kg = 500, .cost = 1e6};
}

swapc::RunOutcome outcome(double runtime, double power, double error, swapc::DeviceSpec device) {
    device.power_watts = power;
    return {.metric = "abs_energy_error", .performance = 1.0, .runtime_seconds = runtime, .accuracy_error = error,
            .device = device};
}

void utility_verdicts(Check& c) {
    using swapc::Verdict;
    const auto win = swapc::utility_verdict(outcome(5, 50, 1e-3, rack("q", 10)), outcome(4, 100, 1e-3, rack("c", 10)));
    c.expect(win.verdict == Verdict::QuantumUtility && win.less_energy && !win.faster && !win.more_accurate,
             "energy-win example");
    const auto same = swapc::utility_verdict(outcome(5, 50, 1e-3, rack("q", 10)), outcome(5, 50, 1e-3, rack("c", 10)));
    c.expect(same.verdict == Verdict::NoUtility, "identical-outcomes example");
    const auto far = swapc::utility_verdict(outcome(1, 1, 0, rack("q", 100)), outcome(10, 100, 1, rack("c", 10)));
    c.expect(far.verdict == Verdict::NotComparable, "not-comparable example");

    sim::Rng rng(9);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto q = outcome(rng.uniform(0.1, 10), rng.uniform(1, 100), rng.uniform(0, 1), rack("q", 10));
        const auto cl = outcome(rng.uniform(0.1, 10), rng.uniform(1, 100), rng.uniform(0, 1), rack("c", 15));
        const auto a = swapc::utility_verdict(q, cl), b = swapc::utility_verdict(cl, q);
        bad += a.faster == b.faster || a.less_energy == b.less_energy || a.more_accurate == b.more_accurate;
    }
    c.expect(bad == 0, std::to_string(bad) + " antisymmetry violations");
    c.detail << "3 examples, 1000 pairs";
}

// --- 10 ------------------------------------------------------------------

void shot_precision(Check& c) {
    // <Z> of RY(theta)|0> is cos(theta); a shot estimate has standard
    // deviation sin(theta) / sqrt(S).
    const double theta = 1.1;
    sim::Circuit ry(1, 1);
    ry.add(sim::Gate::parametric(sim::GateKind::RY, 0, 0));
    const sim::PauliSum z(1, {{1.0, "Z"}});
    const double params[] = {theta};
    for (std::uint64_t shots : {100u, 1000u, 10000u}) {
        double sum = 0, sq = 0;
        const int seeds = 200;
        for (int s = 0; s < seeds; ++s) {
            const double e = algo::estimate_energy(z, ry, params, shots, 1 + 1000 * std::uint64_t(s)).first;
            sum += e;
            sq += e * e;
        }
        const double mean = sum / seeds;
        const double sd = std::sqrt((sq - seeds * mean * mean) / (seeds - 1));
        const double want = std::sin(theta) / std::sqrt(double(shots));
        c.expect(close_rel(sd, want, 0.2), "S=" + std::to_string(shots) + " sd " + std::to_string(sd));
        c.detail << "S=" << shots << " sd*sqrt(S)=" << sd * std::sqrt(double(shots)) << " ";
    }
    c.detail << "(want " << std::sin(theta) << ")";
}

// --- 11 ------------------------------------------------------------------

void qcbm_shots(Check& c) {
    std::vector<prof::Sample> s;
    for (std::size_t n = 2; n <= 5; ++n) s.push_back({double(n), double(algo::shots_to_resolve(n, 0.05))});
    const auto fit = prof::fit_scaling(s);
    c.expect(fit.best_class == arl::Growth::exponential(), "classified " + arl::to_string(fit.best_class));
    c.detail << "shots";
    for (const auto& p : s) c.detail << " " << p.count;
    c.detail << " -> " << arl::to_string(fit.best_class);
}

// --- 12 ------------------------------------------------------------------

void determinism(Check& c) {
    ScratchDir dir("acc_det");
    const auto out = dir.path().string();
    const std::vector<std::vector<std::string>> commands = {
        {"bench", "run", "vqe", "--hamiltonian", data_file("hamiltonians/tfim2.txt"), "--shots", "200"},
        {"bench", "run", "varqite", "--steps", "5"},
        {"bench", "run", "qk", "--points", "6", "--shots", "100"},
        {"bench", "run", "qvc", "--points", "6", "--iterations", "2", "--shots", "100"},
        {"bench", "run", "re-uploading", "--points", "6", "--iterations", "2"},
        {"bench", "run", "qcbm", "--qubits", "2", "--iterations", "20", "--shots", "500"},
        {"bench", "run", "mirror", "--sizes", "2..4", "--shots", "300", "--noise-p1", "0.01", "--noise-p2", "0.01"},
        {"sweep", "qcbm", "--sizes", "2..5"},
        {"compile", data_file("circuits/ghz4_far.json"), "--topology", "linear"},
        {"score", "--performance", "1000", "--runtime", "10", "--device", data_file("devices/laptop.json")},
        {"verdict", "--quantum", data_file("outcomes/quantum.json"), "--classical",
         data_file("outcomes/classical.json")},
        {"survey"},
    };
    int i = 0;
    for (auto args : commands) {
        const std::string tag = args[0] + (args[0] == "bench" ? " " + args[2] : "");
        std::string first;
        for (int rep = 0; rep < 2; ++rep) {
            const auto path = out + "/" + std::to_string(i) + "_" + std::to_string(rep);
            auto full = args;
            if (args[0] == "bench" || args[0] == "sweep") full.insert(full.end(), {"--seed", "123"});
            full.insert(full.end(), {"-o", path});
            const auto r = run_cli(full);
            c.expect(r.code == 0, tag + " exit " + std::to_string(r.code) + ": " + r.err);
            const auto art = canonical_artifacts(path);
            if (rep == 0) first = art;
            else c.expect(!first.empty() && art == first, tag + " artifacts differ");
        }
        ++i;
    }
    // report consumes the sweep row written above.
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
        const auto path = out + "/report_" + std::to_string(rep);
        const auto r = run_cli({"report", "--measured", out + "/7_0/row.json", "-o", path});
        c.expect(r.code == 0, "report exit " + std::to_string(r.code));
        const auto art = canonical_artifacts(path);
        if (rep == 0) first = art;
        else c.expect(art == first, "report artifacts differ");
    }
    c.detail << commands.size() + 1 << " commands twice each";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> criteria = {
        {"survey reproduction", survey_reproduction},
        {"score formulas", score_formulas},
        {"VQE correctness", vqe_correctness},
        {"VarQiTE", varqite},
        {"compiler soundness", compiler_soundness},
        {"scaling-fit recovery", scaling_fits},
        {"kernel properties", kernel_properties},
        {"mirror benchmark", mirror_benchmark},
        {"utility verdicts", utility_verdicts},
        {"shot-precision law", shot_precision},
        {"QCBM shot growth", qcbm_shots},
        {"determinism", determinism},
    };
    int failed = 0, index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            run(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = c.failures.empty();
        failed += !ok;
        std::printf("%s %2d %-22s (%.2fs) %s\n", ok ? "PASS" : "FAIL", index, name.c_str(), secs,
                    c.detail.str().c_str());
        for (std::size_t k = 0; k < c.failures.size() && k < 10; ++k) std::printf("       %s\n", c.failures[k].c_str());
        if (c.failures.size() > 10) std::printf("       ... %zu more\n", c.failures.size() - 10);
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
