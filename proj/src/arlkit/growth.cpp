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

#include "qutil/arlkit/growth.hpp"

#include <charconv>

#include "qutil/error.hpp"

namespace qutil::arl {

int Growth::rank() const {
    switch (kind) {
        case Kind::Polynomial: return degree;
        case Kind::Exponential: return 1 << 20;
        case Kind::Unresolved: break;
    }
    return 1 << 21;
}

std::string to_string(const Growth& g) {
    switch (g.kind) {
        case Growth::Kind::Exponential: return "exponential";
        case Growth::Kind::Unresolved: return "unresolved";
        case Growth::Kind::Polynomial: break;
    }
    switch (g.degree) {
        case 0: return "constant";
        case 1: return "linear";
        case 2: return "quadratic";
        case 3: return "cubic";
        default: return "poly_" + std::to_string(g.degree);
    }
}

Growth parse_growth(std::string_view text) {
    if (text == "constant") return Growth::constant();
    if (text == "linear") return Growth::polynomial(1);
    if (text == "quadratic") return Growth::polynomial(2);
    if (text == "cubic") return Growth::polynomial(3);
    if (text == "exponential") return Growth::exponential();
    if (text == "unresolved") return Growth::unresolved();
    if (text.starts_with("poly_")) {
        int k = -1;
        const auto digits = text.substr(5);
        const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec == std::errc() && end == digits.data() + digits.size() && k >= 0) return Growth::polynomial(k);
    }
    throw InvalidInput("unknown growth class '" + std::string(text) + "'");
}

}  // namespace qutil::arl
