// Copyright 2026 The adaptstab Authors
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

namespace adaptstab {

/// Operand sizes disagree (qubit counts, matrix shapes, vector lengths).
class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input: Pauli strings, code files, circuit or tableau JSON.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A request exceeds an enumeration or memory guard (qubit caps, subset sizes).
class ResourceGuardError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A forced measurement outcome contradicts a deterministic one.
class ContradictionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Structurally invalid input that parsed fine: anticommuting checks,
/// dependent generators, unknown gate names, qubit collisions.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace adaptstab
