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

#include <set>
#include <string>
#include <string_view>

#include "qutil/simcore/gate.hpp"

namespace qutil::compile {

using sim::GateKind;

/// Target gate alphabet of a device. Construction checks universality: at
/// least two distinct rotation axes among the 1-qubit kinds and CZ or CNOT
/// among the 2-qubit kinds. Allowed 2-qubit natives are CZ, CNOT and SWAP.
class NativeGateSet {
  public:
    NativeGateSet(std::set<GateKind> one_qubit, std::set<GateKind> two_qubit);

    /// {RX, RY, RZ} + {CZ}.
    static NativeGateSet defaults();

    /// "default", or a comma-separated kind list such as "RZ,RY,CNOT".
    static NativeGateSet parse(std::string_view text);

    const std::set<GateKind>& one_qubit() const { return one_qubit_; }
    const std::set<GateKind>& two_qubit() const { return two_qubit_; }
    bool contains(GateKind kind) const { return one_qubit_.contains(kind) || two_qubit_.contains(kind); }
    std::string to_string() const;

  private:
    std::set<GateKind> one_qubit_;
    std::set<GateKind> two_qubit_;
};

}  // namespace qutil::compile
