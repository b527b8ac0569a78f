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

#include <map>
#include <string>
#include <string_view>

#include "qutil/arlkit/report.hpp"
#include "qutil/profiler/scaling.hpp"

namespace qutil::prof {

/// Applications with a runnable implementation: vqe, varqite, qk, qvc,
/// re-uploading, qcbm.
bool is_implemented_app(std::string_view app_id);

/// Legend symbol swept by default for a column ("circuits", "depth",
/// "shots") of an implemented application.
std::string default_variable(std::string_view app_id, std::string_view column);

/// Compares measured fits, keyed by column, with the tabulated scaling of
/// `app_id`. Each cell's expected class is the growth of the tabulated
/// expression in the fit's variable. Columns without a fit are NOT-MEASURED.
/// Throws InvalidInput for unknown or non-implemented apps and for columns
/// other than circuits, depth and shots.
arl::MeasuredRow verify_table_row(std::string_view app_id, const std::map<std::string, ScalingFit>& fits);

}  // namespace qutil::prof
