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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "adaptstab/pauli.h"

namespace adaptstab {

/// Clifford gate set shared by the tableau simulator and the circuit IR.
/// CNOT accepts one control followed by one or more targets (a fan-out gate);
/// CP is a controlled single-site Pauli whose letter rides alongside.
enum class GateKind { H, S, SDG, X, Y, Z, CNOT, CZ, SWAP, CP };

std::string_view gate_name(GateKind kind);
/// Accepts the names printed by gate_name ("SDG" is also accepted as "S_DAG").
GateKind parse_gate_kind(std::string_view name);

bool is_single_qubit(GateKind kind);

struct GateApplication {
    GateKind kind = GateKind::H;
    std::vector<std::size_t> qubits;
    PauliLetter letter = PauliLetter::X;  // CP only
};

/// Throws ValidationError for wrong arity, repeated qubits, or a CP without a
/// non-identity letter; DimensionError for qubits >= n.
void check_gate(const GateApplication& gate, std::size_t n);

/// P <- U P U^dagger.
void conjugate(PauliOperator& p, const GateApplication& gate);

}  // namespace adaptstab
