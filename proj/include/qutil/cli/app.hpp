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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qutil::cli {

inline constexpr std::string_view kVersion = "0.1.0";

/// Base seed used when neither --seed nor QUTIL_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Exit codes: 0 success, 1 invalid flags, config or input, 2 runtime failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitRuntimeError = 2;

/// Runs one command line. `args` excludes the program name. Human-readable
/// output goes to `out`, diagnostics to `err`; artifacts go to the --out
/// directory of the chosen subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// JSON array describing every leaf command: path, description, whether it
/// takes --seed, options required via flag or config, and each option's
/// flags, type, default and exclusions. Defaults ignore QUTIL_SEED.
std::string cli_schema();

}  // namespace qutil::cli
