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

#include "qutil/cli/app.hpp"

#include <Eigen/Core>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "internal.hpp"
#include "qutil/cli/artifacts.hpp"
#include "qutil/error.hpp"

namespace qutil::cli {

namespace detail {

namespace fs = std::filesystem;

void Context::write_json(const std::string& name, const json& j) {
    cli::write_json(out / name, j);
    artifacts.push_back(name);
}

void Context::write_text(const std::string& name, const std::string& text) {
    write_atomic(out / name, text);
    artifacts.push_back(name);
}

std::uint64_t default_seed() {
    const char* env = std::getenv("QUTIL_SEED");
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used == std::string_view(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidInput("QUTIL_SEED must be a non-negative integer, got '" + std::string(env) + "'");
}

void add_common(CLI::App* leaf, Common& common, bool seeded) {
    leaf->add_option("-o,--out", common.out_dir, "Output directory");
    leaf->add_option("--config", common.config_path, "JSON config; keys are long flag names");
    if (seeded) leaf->add_option("--seed", common.seed, "Base seed (env QUTIL_SEED overrides the default)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

json read_json_file(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw InvalidInput("malformed JSON in '" + path + "': " + e.what());
    }
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> out;
    auto number = [&](const std::string& s) -> std::size_t {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw InvalidInput("bad size '" + s + "' in '" + text + "'");
        return static_cast<std::size_t>(v);
    };
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        if (const auto dots = part.find(".."); dots != std::string::npos) {
            const auto lo = number(part.substr(0, dots)), hi = number(part.substr(dots + 2));
            if (lo > hi) throw InvalidInput("empty size range '" + part + "'");
            for (auto s = lo; s <= hi; ++s) out.push_back(s);
        } else {
            out.push_back(number(part));
        }
    }
    if (out.empty()) throw InvalidInput("no sizes given");
    return out;
}

namespace {

bool skip_in_echo(const CLI::Option* o) {
    const auto name = o->get_name();
    return name == "--help" || name == "--config" || name == "-o,--out" || o->get_single_name() == "help" ||
           o->get_single_name() == "config" || o->get_single_name() == "out";
}

std::string option_value(const CLI::Option* o) {
    if (o->count() == 0) return o->get_default_str();
    std::string v;
    for (const auto& r : o->results()) v += (v.empty() ? "" : ",") + r;
    return v;
}

/// Fills options not given on the command line from a JSON object.
void apply_config(CLI::App& leaf, const std::string& path) {
    const json cfg = read_json_file(path);
    if (!cfg.is_object()) throw InvalidInput("config '" + path + "' must be a JSON object");
    for (const auto& [key, value] : cfg.items()) {
        CLI::Option* o = leaf.get_option_no_throw("--" + key);
        if (o == nullptr) o = leaf.get_option_no_throw(key);
        if (o == nullptr || key == "config" || key == "help") {
            throw InvalidInput("unknown config key '" + key + "' for '" + leaf.get_name() + "'");
        }
        if (o->count() > 0) continue;  // flags win
        std::vector<std::string> items;
        auto scalar = [&](const json& v) {
            if (v.is_string()) return v.get<std::string>();
            if (v.is_boolean() || v.is_number()) return v.dump();
            throw InvalidInput("config key '" + key + "' must be a scalar or an array of scalars");
        };
        if (value.is_array()) {
            std::string joined;
            for (const auto& v : value) joined += (joined.empty() ? "" : ",") + scalar(v);
            items.push_back(joined);
        } else {
            items.push_back(scalar(value));
        }
        for (const auto& s : items) o->add_result(s);
        o->run_callback();
    }
}

json config_echo(const CLI::App& leaf) {
    json j = json::object();
    for (const CLI::Option* o : leaf.get_options()) {
        if (skip_in_echo(o)) continue;
        j[o->get_single_name()] = option_value(o);
    }
    return j;
}

/// Command line equivalent to the resolved configuration, minus --out.
std::vector<std::string> replay_argv(const std::vector<std::string>& path, const CLI::App& leaf) {
    std::vector<std::string> argv = path;
    for (const CLI::Option* o : leaf.get_options()) {
        if (o->get_positional() && !skip_in_echo(o)) argv.push_back(option_value(o));
    }
    for (const CLI::Option* o : leaf.get_options()) {
        if (o->get_positional() || skip_in_echo(o)) continue;
        const auto value = option_value(o);
        if (o->get_expected_min() == 0) {
            if (value == "true" || value == "1") argv.push_back("--" + o->get_single_name());
            continue;
        }
        if (value.empty()) continue;
        argv.push_back("--" + o->get_single_name());
        argv.push_back(value);
    }
    return argv;
}

json versions() {
    return {{"qutil", std::string(kVersion)},
            {"cli11", CLI11_VERSION},
            {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                  std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                  std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
            {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                          std::to_string(EIGEN_MINOR_VERSION)},
            {"compiler", __VERSION__}};
}

}  // namespace

}  // namespace detail

namespace {

void build_app(CLI::App& app, detail::Common& common, std::vector<detail::Command>& commands) {
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    app.option_defaults()->always_capture_default();
    detail::register_bench(app, common, commands);
    detail::register_sweep(app, common, commands);
    detail::register_misc(app, common, commands);
}

nlohmann::json option_schema(const CLI::Option* o) {
    nlohmann::json j = {{"name", o->get_single_name()},
              {"flags", o->get_name(false, true)},
              {"positional", o->get_positional()},
              {"takes_value", o->get_type_size() != 0},
              {"description", o->get_description()}};
    if (!o->get_type_name().empty()) j["type"] = o->get_type_name();
    if (o->get_type_size() != 0 && !o->get_default_str().empty()) j["default"] = o->get_default_str();
    if (!o->get_excludes().empty()) {
        nlohmann::json ex = nlohmann::json::array();
        for (const CLI::Option* e : o->get_excludes()) ex.push_back(e->get_single_name());
        j["excludes"] = ex;
    }
    return j;
}

}  // namespace

std::string cli_schema() {
    using namespace detail;
    CLI::App app{"Quantum application benchmarking harness", "qutil"};
    Common common;
    common.seed = kDefaultSeed;  // documented default, independent of QUTIL_SEED
    std::vector<Command> commands;
    build_app(app, common, commands);
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : commands) {
        nlohmann::json opts = nlohmann::json::array();
        for (const CLI::Option* o : c.app->get_options()) {
            if (o->get_single_name() != "help") opts.push_back(option_schema(o));
        }
        out.push_back({{"command", c.path},
                       {"description", c.app->get_description()},
                       {"seeded", c.seeded},
                       {"required", c.required},
                       {"options", opts}});
    }
    return out.dump(2);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace detail;
    CLI::App app{"Quantum application benchmarking harness", "qutil"};
    Common common;
    std::vector<Command> commands;
    try {
        common.seed = default_seed();
        build_app(app, common, commands);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfigError;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitConfigError;
    }

    const Command* cmd = nullptr;
    for (const auto& c : commands) {
        if (c.app->parsed()) cmd = &c;
    }
    if (cmd == nullptr) {
        err << app.help();
        return kExitConfigError;
    }

    try {
        if (!common.config_path.empty()) apply_config(*cmd->app, common.config_path);
        for (const auto& name : cmd->required) {
            const CLI::Option* o = cmd->app->get_option_no_throw(name);
            if (o == nullptr) o = cmd->app->get_option_no_throw("--" + name);
            if (o->count() == 0) throw InvalidInput("'" + name + "' is required (flag or config key)");
        }
        Context ctx{common.out_dir, common.seed, out, err, {}};
        json seeds = cmd->run(ctx);
        json manifest = {{"command", cmd->path},
                         {"config", config_echo(*cmd->app)},
                         {"argv", replay_argv(cmd->path, *cmd->app)},
                         {"seeds", std::move(seeds)},
                         {"versions", versions()},
                         {"artifacts", ctx.artifacts}};
        ctx.write_json("manifest.json", manifest);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        err << "runtime error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
}

}  // namespace qutil::cli
