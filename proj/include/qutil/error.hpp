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

#include <stdexcept>
#include <string>

namespace qutil {

/// Raised for malformed inputs: bad configs, unparsable files, violated
/// preconditions. The CLI maps these to exit code 1.
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A qubit or parameter index outside the valid range.
class IndexError : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

/// A problem exceeds what the dense simulator / brute-force checks allow.
class SizeLimitError : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

/// Gate kind that a given pass cannot handle (decomposition, inversion).
class UnsupportedGate : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

/// Mid-circuit measurement / classically controlled operations. Recognised
/// in circuit files but not executable by the compiler or the simulator.
class ClassicalControlError : public UnsupportedGate {
  public:
    using UnsupportedGate::UnsupportedGate;
};

/// Failures that happen while running an otherwise valid job (numerical
/// breakdown, incomplete instrumentation). The CLI maps these to exit code 2.
class RuntimeFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NumericalError : public RuntimeFailure {
  public:
    using RuntimeFailure::RuntimeFailure;
};

class IncompleteProfile : public RuntimeFailure {
  public:
    using RuntimeFailure::RuntimeFailure;
};

}  // namespace qutil
