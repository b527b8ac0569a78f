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

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <set>

#include "cli_harness.hpp"
#include "qutil/algokit/hamiltonian.hpp"
#include "qutil/simcore/pauli_sum.hpp"

using namespace qutil::testing;
using nlohmann::json;
namespace fs = std::filesystem;

TEST_CASE("survey prints the 11-row table and writes every format") {
    ScratchDir dir("survey");
    const auto r = run_cli({"survey", "--format", "csv", "-o", dir.sub("out")});
    REQUIRE(r.code == 0);
    CHECK(r.out == slurp(std::string(QUTIL_TEST_GOLDEN_DIR) + "/survey.csv"));
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 12);  // header + 11 rows
    const auto j = load_json(dir.path() / "out/survey.json");
    CHECK(j["applications"].size() == 11);
    CHECK(fs::exists(dir.path() / "out/survey.md"));
    CHECK(load_json(dir.path() / "out/manifest.json")["command"] == json{"survey"});
}

TEST_CASE("bench run vqe on the TFIM2 file reaches the ground energy") {
    ScratchDir dir("vqe");
    const auto r = run_cli({"bench", "run", "vqe", "--hamiltonian", data_file("hamiltonians/tfim2.txt"), "--exact",
                            "-o", dir.sub("out")});
    REQUIRE(r.code == 0);
    const auto res = load_json(dir.path() / "out/result.json");
    const double e = res["result"]["final_energy"];
    // Oracle: -Z0Z1 - X0 - X1 has ground energy -sqrt(5) (2x2 block [[-1,-2],[-2,1]] in the even sector).
    CHECK(std::abs(e + std::sqrt(5.0)) < 1e-3);
    const auto h = qutil::sim::PauliSum::parse(slurp(data_file("hamiltonians/tfim2.txt")));
    CHECK(qutil::algo::exact_ground_energy(h) == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-12));
    for (const char* f : {"result.json", "summary.md", "trace.svg", "manifest.json"}) {
        CHECK(fs::exists(dir.path() / "out" / f));
    }
}

TEST_CASE("compile bell.json onto a line inserts no SWAPs") {
    ScratchDir dir("compile");
    const auto r = run_cli({"compile", data_file("circuits/bell.json"), "--topology", "linear", "--natives", "default",
                            "-o", dir.sub("out")});
    REQUIRE(r.code == 0);
    const auto stats = load_json(dir.path() / "out/stats.json");
    CHECK(stats["swap_inserted"] == 0);
    CHECK(stats["equivalent"] == true);
    const auto far = run_cli({"compile", data_file("circuits/ghz4_far.json"), "--topology", "linear", "-o",
                              dir.sub("far")});
    REQUIRE(far.code == 0);
    const auto fs2 = load_json(dir.path() / "far/stats.json");
    CHECK(fs2["swap_inserted"].get<int>() > 0);
    CHECK(fs2["nonadjacent_two_qubit"] == 0);
    CHECK(fs2["equivalent"] == true);
}

TEST_CASE("exit codes: 1 for config errors, 2 for runtime errors") {
    ScratchDir dir("codes");
    const auto out = dir.sub("out");
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({"bench", "run", "shor", "-o", out}).code == 1);                   // unknown app id
    CHECK(run_cli({"bench", "run", "vqe", "--layers", "x", "-o", out}).code == 1);   // malformed flag
    CHECK(run_cli({"bench", "run", "vqe", "--qubits", "40", "-o", out}).code == 1);  // simulator size limit
    CHECK(run_cli({"bench", "run", "vqe", "--hamiltonian", "/nonexistent.txt", "-o", out}).code == 1);
    CHECK(run_cli({"bench", "run", "vqe", "--exact", "--shots", "10", "-o", out}).code == 1);
    CHECK(run_cli({"sweep", "qcbm", "--sizes", "2,3,4", "-o", out}).code == 1);  // too few sizes
    CHECK(run_cli({"sweep", "qcbm", "--sizes", "2..12", "-o", out}).code == 1);  // beyond QCBM limit
    CHECK(run_cli({"sweep", "vqe", "--sizes", "2..5", "--variable", "|T|", "-o", out}).code == 1);

    fs::create_directories(dir.path() / "cfg");
    std::ofstream(dir.path() / "cfg/bad.json") << "{ not json";
    std::ofstream(dir.path() / "cfg/unknown.json") << R"({"no_such_flag": 1})";
    CHECK(run_cli({"bench", "run", "vqe", "--config", dir.sub("cfg/bad.json"), "-o", out}).code == 1);
    CHECK(run_cli({"bench", "run", "vqe", "--config", dir.sub("cfg/unknown.json"), "-o", out}).code == 1);

    // The output directory cannot be created beneath a regular file.
    std::ofstream(dir.path() / "plainfile") << "x";
    CHECK(run_cli({"survey", "-o", dir.sub("plainfile/out")}).code == 2);
}

TEST_CASE("config precedence: flags over config file over defaults") {
    ScratchDir dir("config");
    std::ofstream(dir.path() / "run.json") << R"({"app": "vqe", "layers": 3, "exact": true, "qubits": 2})";
    const auto cfg = dir.sub("run.json");

    REQUIRE(run_cli({"bench", "run", "--config", cfg, "-o", dir.sub("a")}).code == 0);
    auto m = load_json(dir.path() / "a/manifest.json");
    CHECK(m["config"]["layers"] == "3");
    CHECK(m["config"]["app"] == "vqe");
    CHECK(m["config"]["dt"] == "0.1");  // untouched default

    REQUIRE(run_cli({"bench", "run", "vqe", "--layers", "1", "--config", cfg, "-o", dir.sub("b")}).code == 0);
    m = load_json(dir.path() / "b/manifest.json");
    CHECK(m["config"]["layers"] == "1");
    CHECK(load_json(dir.path() / "b/result.json")["result"]["num_params"] == 4);  // 2 N layers
}

TEST_CASE("QUTIL_SEED sets the default seed and --seed overrides it") {
    ScratchDir dir("seed");
    ::setenv("QUTIL_SEED", "777", 1);
    REQUIRE(run_cli({"bench", "run", "vqe", "--exact", "-o", dir.sub("a")}).code == 0);
    REQUIRE(run_cli({"bench", "run", "vqe", "--exact", "--seed", "5", "-o", dir.sub("b")}).code == 0);
    ::setenv("QUTIL_SEED", "not-a-number", 1);
    CHECK(run_cli({"bench", "run", "vqe", "--exact", "-o", dir.sub("c")}).code == 1);
    ::unsetenv("QUTIL_SEED");
    CHECK(load_json(dir.path() / "a/manifest.json")["seeds"]["base"] == 777);
    CHECK(load_json(dir.path() / "b/manifest.json")["seeds"]["base"] == 5);
    REQUIRE(run_cli({"bench", "run", "vqe", "--exact", "-o", dir.sub("d")}).code == 0);
    CHECK(load_json(dir.path() / "d/manifest.json")["seeds"]["base"] == qutil::cli::kDefaultSeed);
}

TEST_CASE("the manifest replays the run and lists exactly the files written") {
    ScratchDir dir("replay");
    REQUIRE(run_cli({"bench", "run", "qk", "--points", "6", "--encoder", "layered", "-o", dir.sub("a")}).code == 0);
    const auto m = load_json(dir.path() / "a/manifest.json");
    auto argv = m["argv"].get<std::vector<std::string>>();
    argv.push_back("-o");
    argv.push_back(dir.sub("b"));
    REQUIRE(run_cli(argv).code == 0);
    CHECK(canonical_artifacts(dir.path() / "a") == canonical_artifacts(dir.path() / "b"));

    std::set<std::string> listed;
    for (const auto& a : m["artifacts"]) listed.insert(a.get<std::string>());
    listed.insert("manifest.json");
    std::set<std::string> present;
    for (const auto& e : fs::recursive_directory_iterator(dir.path() / "a")) {
        if (e.is_regular_file()) present.insert(fs::relative(e.path(), dir.path() / "a").string());
    }
    CHECK(listed == present);
}

TEST_CASE("inputs are not modified") {
    ScratchDir dir("inputs");
    const auto q = data_file("outcomes/quantum.json"), c = data_file("outcomes/classical.json");
    const auto before_q = slurp(q), before_c = slurp(c);
    REQUIRE(run_cli({"verdict", "--quantum", q, "--classical", c, "-o", dir.sub("v")}).code == 0);
    CHECK(slurp(q) == before_q);
    CHECK(slurp(c) == before_c);
    CHECK(load_json(dir.path() / "v/verdict.json")["verdict"] == "quantum_utility");
}

TEST_CASE("score and verdict subcommands") {
    ScratchDir dir("score");
    REQUIRE(run_cli({"score", "--performance", "1000", "--runtime", "10", "--power", "50", "-o", dir.sub("s1")}).code ==
            0);
    CHECK(load_json(dir.path() / "s1/score.json")["score1"] == 2.0);
    REQUIRE(run_cli({"score", "--performance", "1000", "--runtime", "10", "--power", "50", "--volume", "2", "-o",
                     dir.sub("s2")})
                .code == 0);
    CHECK(load_json(dir.path() / "s2/score.json")["score2"] == 1.0);
    CHECK(run_cli({"score", "--performance", "0", "--runtime", "10", "--power", "50", "-o", dir.sub("s3")}).code == 1);
    CHECK(run_cli({"score", "--runtime", "10", "--power", "50", "-o", dir.sub("s4")}).code == 1);

    REQUIRE(run_cli({"verdict", "--quantum", data_file("outcomes/quantum.json"), "--classical",
                     data_file("outcomes/laptop.json"), "-o", dir.sub("v")})
                .code == 0);
    CHECK(load_json(dir.path() / "v/verdict.json")["verdict"] == "not_comparable");
}

TEST_CASE("sweep writes per-size points, fits and a measured row that report consumes") {
    ScratchDir dir("sweep");
    const auto r = run_cli({"sweep", "qk", "--sizes", "4,6,8,10", "-o", dir.sub("sw")});
    REQUIRE(r.code == 0);
    for (int s : {4, 6, 8, 10}) CHECK(fs::exists(dir.path() / ("sw/points/size_" + std::to_string(s) + ".json")));
    const auto row = load_json(dir.path() / "sw/row.json");
    CHECK(row["app"] == "qk");
    const auto sweep = load_json(dir.path() / "sw/sweep.json");
    CHECK(sweep["fits"]["circuits"]["best_class"] == "quadratic");
    // |T|(|T|-1)/2 kernel circuits per point.
    for (const auto& p : sweep["points"]) {
        const double t = p["size"];
        CHECK(p["counts"]["circuits"] == t * (t - 1) / 2);
    }
    REQUIRE(run_cli({"report", "--measured", dir.sub("sw/row.json"), "-o", dir.sub("rep")}).code == 0);
    const auto rep = slurp(dir.path() / "rep/report.md");
    CHECK(rep.find("MATCH") != std::string::npos);
    CHECK(load_json(dir.path() / "rep/report.json")["measured"].size() == 1);
}

TEST_CASE("bench run writes a plot for every app") {
    ScratchDir dir("apps");
    const std::vector<std::vector<std::string>> runs = {
        {"varqite", "--steps", "5"},
        {"qvc", "--points", "6", "--iterations", "2"},
        {"re-uploading", "--points", "6", "--iterations", "2"},
        {"qcbm", "--qubits", "2", "--iterations", "20"},
        {"mirror", "--sizes", "2..3", "--shots", "200"},
    };
    for (const auto& extra : runs) {
        std::vector<std::string> args = {"bench", "run"};
        args.insert(args.end(), extra.begin(), extra.end());
        args.push_back("-o");
        args.push_back(dir.sub(extra.front()));
        const auto r = run_cli(args);
        CAPTURE(extra.front());
        CAPTURE(r.err);
        REQUIRE(r.code == 0);
        bool svg = false;
        for (const auto& e : fs::directory_iterator(dir.path() / extra.front())) {
            if (e.path().extension() == ".svg") {
                const auto text = slurp(e.path());
                svg = text.starts_with("<svg") && text.find("</svg>") != std::string::npos;
            }
        }
        CHECK(svg);
    }
}

TEST_CASE("strip_runtime removes timing keys at any depth") {
    const json j = {{"a", 1},
                    {"runtime", {{"wall_seconds", 0.3}}},
                    {"nested", {{"wall_runtime_seconds", 2.0}, {"keep", {1, 2}}}},
                    {"list", json::array({json{{"x_seconds", 1}, {"y", 2}}})}};
    const json want = {{"a", 1}, {"nested", {{"keep", {1, 2}}}}, {"list", json::array({json{{"y", 2}}})}};
    CHECK(qutil::cli::strip_runtime(j) == want);
}

TEST_CASE("the shipped schema lists exactly the registered flags") {
    const auto shipped = load_json(std::string(QUTIL_TEST_DATA_DIR) + "/../schema/cli_schema.json");
    CHECK(shipped["commands"] == json::parse(qutil::cli::cli_schema()));
    // Every command's flags are accepted as config keys.
    for (const auto& cmd : shipped["commands"]) {
        CHECK(cmd["options"].size() >= 2);  // --out and --config at least
    }
}
