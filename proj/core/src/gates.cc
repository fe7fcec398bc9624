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

#include "adaptstab/gates.h"

#include <algorithm>
#include <array>
#include <string>

#include "adaptstab/errors.h"

namespace adaptstab {
namespace {

constexpr std::array<std::string_view, 10> kNames = {"H", "S", "SDG", "X", "Y", "Z", "CNOT", "CZ", "SWAP", "CP"};

}  // namespace

std::string_view gate_name(GateKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

GateKind parse_gate_kind(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) return static_cast<GateKind>(i);
    }
    if (name == "S_DAG") return GateKind::SDG;
    if (name == "CX") return GateKind::CNOT;
    throw ValidationError("unknown gate '" + std::string(name) + "'");
}

bool is_single_qubit(GateKind kind) {
    switch (kind) {
        case GateKind::H:
        case GateKind::S:
        case GateKind::SDG:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
            return true;
        default:
            return false;
    }
}

void check_gate(const GateApplication& gate, std::size_t n) {
    const std::size_t arity = gate.qubits.size();
    const std::string name(gate_name(gate.kind));
    if (is_single_qubit(gate.kind)) {
        if (arity != 1) throw ValidationError(name + " acts on exactly one qubit");
    } else if (gate.kind == GateKind::CNOT) {
        if (arity < 2) throw ValidationError("CNOT needs a control and at least one target");
    } else if (arity != 2) {
        throw ValidationError(name + " acts on exactly two qubits");
    }
    if (gate.kind == GateKind::CP && gate.letter == PauliLetter::I) {
        throw ValidationError("controlled-Pauli needs a non-identity letter");
    }
    for (std::size_t i = 0; i < arity; ++i) {
        if (gate.qubits[i] >= n) {
            throw DimensionError(name + " on qubit " + std::to_string(gate.qubits[i]) + " of a " +
                                 std::to_string(n) + "-qubit register");
        }
        if (std::find(gate.qubits.begin() + static_cast<std::ptrdiff_t>(i) + 1, gate.qubits.end(), gate.qubits[i]) !=
            gate.qubits.end()) {
            throw ValidationError(name + " repeats qubit " + std::to_string(gate.qubits[i]));
        }
    }
}

void conjugate(PauliOperator& p, const GateApplication& gate) {
    const auto& q = gate.qubits;
    switch (gate.kind) {
        case GateKind::H:
            p.apply_h(q[0]);
            break;
        case GateKind::S:
            p.apply_s(q[0]);
            break;
        case GateKind::SDG:
            p.apply_sdg(q[0]);
            break;
        case GateKind::X:
            p.apply_x(q[0]);
            break;
        case GateKind::Y:
            p.apply_y(q[0]);
            break;
        case GateKind::Z:
            p.apply_z(q[0]);
            break;
        case GateKind::CNOT:
            for (std::size_t i = 1; i < q.size(); ++i) p.apply_cnot(q[0], q[i]);
            break;
        case GateKind::CZ:
            p.apply_cz(q[0], q[1]);
            break;
        case GateKind::SWAP:
            p.apply_swap(q[0], q[1]);
            break;
        case GateKind::CP:
            switch (gate.letter) {
                case PauliLetter::X:
                    p.apply_cnot(q[0], q[1]);
                    break;
                case PauliLetter::Z:
                    p.apply_cz(q[0], q[1]);
                    break;
                case PauliLetter::Y:
                    p.apply_cy(q[0], q[1]);
                    break;
                case PauliLetter::I:
                    break;
            }
            break;
    }
}

}  // namespace adaptstab
