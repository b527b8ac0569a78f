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
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qutil/arlkit/growth.hpp"

namespace qutil::arl {

/// Legend of the scaling variables used in the survey: symbol -> meaning.
/// Symbols are written in ASCII ("eps" for the precision, "|T|" for the
/// training-set size, "n_out" etc. for subscripted names).
const std::map<std::string, std::string>& scaling_legend();

/// Parsed asymptotic resource expression such as "O(tq(q+p))" or
/// "O(binom(|T|, 2))". The grammar is documented in docs/scaling_expr.md.
/// Juxtaposition multiplies ("nm" is n*m); every identifier must be a legend
/// symbol or one of the functions binom, ceil, log.
class ScalingExpr {
  public:
    struct Node;

    static ScalingExpr parse(std::string_view text);

    /// Source text exactly as given to parse().
    const std::string& text() const { return text_; }
    /// Legend symbols that occur in the expression.
    std::set<std::string> variables() const;

    /// Growth in `variable` with every other symbol held fixed.
    Growth growth_in(const std::string& variable) const;

    /// Numeric value with the O(.) wrapper dropped. Every variable used must
    /// be bound; binom accepts real arguments via the gamma function.
    double evaluate(const std::map<std::string, double>& values) const;

    friend bool operator==(const ScalingExpr& a, const ScalingExpr& b) { return a.text_ == b.text_; }

  private:
    std::string text_;
    std::shared_ptr<const Node> root_;
};

}  // namespace qutil::arl
