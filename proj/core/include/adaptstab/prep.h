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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adaptstab/circuit.h"
#include "adaptstab/code.h"
#include "adaptstab/coloring.h"
#include "adaptstab/tableau.h"

namespace adaptstab {

/// One controlled-Pauli gate of a parallel measurement: ancilla of `check`
/// controls `letter` on `qubit` in layer `color`.
struct ScheduledEdge {
    std::size_t qubit = 0;
    std::size_t check = 0;
    PauliLetter letter = PauliLetter::I;
    std::size_t color = 0;
};

struct MeasurementSchedule {
    std::size_t num_qubits = 0;
    std::size_t num_checks = 0;
    std::size_t num_colors = 0;
    std::vector<ScheduledEdge> edges;  // sorted by (qubit, check)

    std::optional<std::size_t> color_of(std::size_t qubit, std::size_t check) const;
};

/// Tanner-graph coloring with max-degree colors.
MeasurementSchedule schedule_measurements(const std::vector<PauliOperator>& checks);

/// Schedule from explicit colors; letters come from the checks. Throws
/// ValidationError unless every support site appears once and the coloring
/// is proper.
MeasurementSchedule make_schedule(const std::vector<PauliOperator>& checks, std::vector<ScheduledEdge> edges);

/// Parity of the shared anticommuting sites where check i's gate runs before
/// check j's; odd means the pair needs a CZ between their ancillas.
bool tangling_parity(const MeasurementSchedule& schedule, std::size_t i, std::size_t j);
std::vector<Edge> tangled_pairs(const MeasurementSchedule& schedule);

struct MeasurementFragment {
    AdaptiveCircuit circuit;
    MeasurementSchedule schedule;
    std::vector<Edge> tangled;
    std::vector<std::size_t> ancillas;        // ancilla of check i
    std::vector<std::size_t> syndrome_cbits;  // bit of check i: 1 when the unsigned check reads -1
    std::size_t controlled_pauli_layers = 0;
    std::size_t cz_layers = 0;
};

/// Measures all checks at once with one ancilla each (ancilla i on qubit
/// ancilla_offset + i, ancilla_offset >= n). Layers: ancilla H (merged),
/// controlled-Pauli layers, CZ layers fixing tangled pairs, H (merged), MZ.
MeasurementFragment synthesize_measurement_circuit(const std::vector<PauliOperator>& checks,
                                                   std::size_t ancilla_offset,
                                                   std::optional<MeasurementSchedule> schedule = std::nullopt);

/// Pauli commuting with every element of `commuting` and anticommuting with
/// every element of `anticommuting`, with sign +1. Throws ValidationError when
/// no such operator exists.
PauliOperator pauli_correction(const std::vector<PauliOperator>& commuting,
                               const std::vector<PauliOperator>& anticommuting);

/// Completion of a code by X-type logical operators. With the checks in
/// canonical form [[A B], [C 0]], the logicals D satisfy B D^T = 0 and stack
/// with the checks to full rank.
struct LogicalConstruction {
    std::size_t z_rank = 0;
    BitMatrix a;
    BitMatrix b;
    BitMatrix c;
    BitMatrix d;
    std::vector<PauliOperator> logicals;
};

LogicalConstruction x_type_logical_construction(const StabilizerCode& code);
std::vector<PauliOperator> x_type_logicals(const StabilizerCode& code);

struct PreparationPlan {
    AdaptiveCircuit circuit;
    StabilizerTableau target;
    std::vector<PauliOperator> measured;  // checks measured by ancillas
    std::vector<PauliOperator> fixed;     // stabilizers of the initial state
    MeasurementFragment fragment;
    std::size_t sparsity = 0;
    std::size_t prep_layers = 0;
    std::size_t correction_layers = 0;
};

/// Measure every check, keep X-type logicals fixed by starting from |+>^n
/// (|0>^n when k = 0), then correct with one parity-conditioned Pauli layer.
PreparationPlan prepare_state(const StabilizerCode& code);

/// Same protocol with a caller-chosen split. `initial` prepares a state on its
/// surviving qubits 0..n-1 that every element of `fixed` stabilizes; it may be
/// adaptive itself.
PreparationPlan prepare_state_explicit(const std::vector<PauliOperator>& measured,
                                       const std::vector<PauliOperator>& fixed, const AdaptiveCircuit& initial,
                                       std::optional<MeasurementSchedule> schedule = std::nullopt);

/// Per-qubit parity-conditioned X and Z layers applying the product of
/// basis_corrections[i] over the checks whose syndrome is -1. The syndrome of
/// check i is bit cbits[i] xor negated[i].
std::vector<Layer> correction_layers(const std::vector<PauliOperator>& basis_corrections,
                                     const std::vector<std::size_t>& cbits, const std::vector<bool>& negated);

struct VerificationOptions {
    std::size_t random_trials = 32;
    bool exhaustive = true;
    std::size_t max_exhaustive_bits = 12;
    std::uint64_t seed = 1;
    std::size_t threads = 0;  // 0: hardware concurrency
};

struct VerificationReport {
    bool verified = false;
    bool exhaustive_done = false;
    std::size_t random_trials = 0;
    std::size_t branches = 0;
    std::size_t infeasible_branches = 0;
    std::optional<std::string> counterexample;
    std::size_t depth = 0;
    std::size_t ancillas = 0;
};

/// Simulates seeded random runs and, when the classical register is small
/// enough, every forced outcome pattern (patterns contradicting a
/// deterministic outcome are counted as infeasible). Every branch must end in
/// `target`.
VerificationReport verify_preparation(const AdaptiveCircuit& circuit, const StabilizerTableau& target,
                                      const VerificationOptions& options = {});

/// Whether Z measurements on the last m - n qubits of `before` can leave
/// `after` on the first n with all outcomes +1: each generator S of `after`
/// needs some z with S (x) Z^z in the group of `before`.
bool check_measurement_transform(const StabilizerTableau& before, const StabilizerTableau& after);

}  // namespace adaptstab
