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

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

namespace qutil::cli::detail {

using nlohmann::json;

/// State shared by every leaf subcommand.
struct Common {
    std::string out_dir = "qutil-out";
    std::string config_path;
    std::uint64_t seed = 0;
};

/// Everything a leaf needs at execution time.
struct Context {
    std::filesystem::path out;
    std::uint64_t seed = 0;
    std::ostream& stdout_;
    std::ostream& stderr_;
    std::vector<std::string> artifacts;  // relative paths written so far

    void write_json(const std::string& name, const json& j);
    void write_text(const std::string& name, const std::string& text);
};

/// A leaf subcommand. `run` writes artifacts and returns the seeds block of
/// the manifest.
struct Command {
    CLI::App* app = nullptr;
    std::vector<std::string> path;
    bool seeded = true;
    std::function<json(Context&)> run;
    /// Options that must be set by a flag or the config file.
    std::vector<std::string> required = {};
};

/// Seed default from QUTIL_SEED, else kDefaultSeed.
std::uint64_t default_seed();

/// Adds --out, --config and (if seeded) --seed to a leaf.
void add_common(CLI::App* leaf, Common& common, bool seeded);

void register_bench(CLI::App& root, Common& common, std::vector<Command>& commands);
void register_sweep(CLI::App& root, Common& common, std::vector<Command>& commands);
void register_misc(CLI::App& root, Common& common, std::vector<Command>& commands);

/// Reads a whole file; missing or unreadable files are InvalidInput.
std::string read_file(const std::string& path);
json read_json_file(const std::string& path);

/// "1,2,3" or "2..6" (inclusive) or a mix such as "2..4,8".
std::vector<std::size_t> parse_sizes(const std::string& text);

}  // namespace qutil::cli::detail
