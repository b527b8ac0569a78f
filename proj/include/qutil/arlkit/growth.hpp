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

#include <string>
#include <string_view>

namespace qutil::arl {

/// Asymptotic growth class of a count in one swept variable. Polynomial
/// degree 0 is "constant". Logarithmic factors do not change the class.
struct Growth {
    enum class Kind { Polynomial, Exponential, Unresolved };

    Kind kind = Kind::Polynomial;
    int degree = 0;  // meaningful for Polynomial only

    static Growth constant() { return {Kind::Polynomial, 0}; }
    static Growth polynomial(int degree) { return {Kind::Polynomial, degree}; }
    static Growth exponential() { return {Kind::Exponential, 0}; }
    static Growth unresolved() { return {Kind::Unresolved, 0}; }

    /// Total order: polynomials by degree, then exponential. Unresolved
    /// compares above everything so it propagates through max().
    int rank() const;

    friend bool operator==(const Growth& a, const Growth& b) {
        return a.kind == b.kind && (a.kind != Kind::Polynomial || a.degree == b.degree);
    }
};

/// "constant", "linear", "quadratic", "cubic", "poly_<k>", "exponential",
/// "unresolved".
std::string to_string(const Growth& g);
Growth parse_growth(std::string_view text);

}  // namespace qutil::arl
