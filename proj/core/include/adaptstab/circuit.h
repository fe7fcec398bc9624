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
#include <set>
#include <string>
#include <vector>

#include "adaptstab/gates.h"
#include "adaptstab/tableau.h"

namespace adaptstab {

/// Gate fires when the XOR of the referenced classical bits equals xor_value.
struct ClassicalCondition {
    std::vector<std::size_t> bits;
    int xor_value = 1;

    bool fires(const std::vector<int>& record) const;
    friend bool operator==(const ClassicalCondition&, const ClassicalCondition&) = default;
};

struct Operation {
    enum class Kind { kGate, kMeasure };

    Kind kind = Kind::kGate;
    GateApplication gate;                       // kGate
    std::optional<ClassicalCondition> condition;  // kGate
    std::size_t qubit = 0;                      // kMeasure, Z basis
    std::size_t cbit = 0;                       // kMeasure
    /// Absorbed into a neighbouring layer for depth accounting.
    bool merged = false;

    static Operation make_gate(GateKind kind, std::vector<std::size_t> qubits, PauliLetter letter = PauliLetter::X);
    static Operation make_conditioned(GateKind kind, std::vector<std::size_t> qubits, ClassicalCondition condition);
    static Operation make_measure(std::size_t qubit, std::size_t cbit);

    bool is_measure() const noexcept { return kind == Kind::kMeasure; }
    std::vector<std::size_t> qubits() const;
};

using Layer = std::vector<Operation>;

/// Layered adaptive circuit on m qubits starting from |0^m>. Measured qubits
/// are discarded; the surviving (never measured) qubits carry the output.
class AdaptiveCircuit {
   public:
    AdaptiveCircuit() = default;
    explicit AdaptiveCircuit(std::size_t num_qubits, std::size_t num_cbits = 0)
        : num_qubits_(num_qubits), num_cbits_(num_cbits) {}

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t num_cbits() const noexcept { return num_cbits_; }
    const std::vector<Layer>& layers() const noexcept { return layers_; }
    std::vector<Layer>& mutable_layers() noexcept { return layers_; }

    std::size_t add_cbit() { return num_cbits_++; }
    void set_num_cbits(std::size_t count) { num_cbits_ = count; }
    void add_layer(Layer layer) { layers_.push_back(std::move(layer)); }
    /// Appends `other`'s layers with its qubits shifted by `qubit_offset` and
    /// classical bits by the current cbit count.
    void append(const AdaptiveCircuit& other, std::size_t qubit_offset = 0);

    /// Qubits measured anywhere in the circuit, ascending.
    std::vector<std::size_t> measured_qubits() const;
    std::vector<std::size_t> surviving_qubits() const;

   private:
    std::size_t num_qubits_ = 0;
    std::size_t num_cbits_ = 0;
    std::vector<Layer> layers_;
};

/// Qubit connectivity. On a grid, qubit i sits at the row-major coordinate of
/// i; a gate is local when its qubits fit in a box of side K per axis.
struct Geometry {
    enum class Kind { kAllToAll, kGrid };

    Kind kind = Kind::kAllToAll;
    std::size_t dimensions = 0;
    std::vector<std::size_t> side_lengths;  // empty: one line holding every qubit

    static Geometry all_to_all() { return {}; }
    static Geometry grid(std::size_t dimensions, std::vector<std::size_t> side_lengths = {});

    std::vector<std::size_t> coordinates(std::size_t qubit, std::size_t num_qubits) const;
    bool is_local(const std::vector<std::size_t>& qubits, std::size_t fan_in, std::size_t num_qubits) const;
    std::string describe() const;
};

struct Violation {
    std::size_t layer = 0;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
    std::string summary() const;
};

ValidationReport validate(const AdaptiveCircuit& c, std::size_t fan_in,
                          const Geometry& geometry = Geometry::all_to_all());

/// Number of layers holding at least one operation not tagged merged.
std::size_t depth(const AdaptiveCircuit& c);
/// m - n_target. Throws DimensionError when n_target > m.
std::size_t ancilla_count(const AdaptiveCircuit& c, std::size_t n_target);
/// Largest fan-in of any gate (1 for measurement-only circuits, 0 if empty).
std::size_t max_fan_in(const AdaptiveCircuit& c);

/// How random measurement outcomes are chosen. Forced bits (0 for +1, 1 for
/// -1) are indexed by classical bit and apply only to random outcomes.
struct OutcomePolicy {
    bool forced = false;
    std::uint64_t seed = 0;
    std::vector<int> bits;

    static OutcomePolicy random(std::uint64_t seed) { return {false, seed, {}}; }
    static OutcomePolicy forcing(std::vector<int> bits) { return {true, 0, std::move(bits)}; }
};

struct SimulationResult {
    StabilizerTableau state;                // on the surviving qubits, ascending
    std::vector<std::size_t> survivors;
    std::vector<int> outcomes;              // classical record, 0/1 per cbit
    std::vector<bool> deterministic;        // per cbit
};

/// Runs the circuit from |0^m>, or from `initial` when given. Throws
/// ContradictionError when a forced bit contradicts a deterministic outcome.
SimulationResult simulate(const AdaptiveCircuit& c, const OutcomePolicy& policy,
                          const std::optional<StabilizerTableau>& initial = std::nullopt);

/// Full m-qubit tableau after the run, measured qubits included.
StabilizerTableau simulate_full(const AdaptiveCircuit& c, const OutcomePolicy& policy,
                                const std::optional<StabilizerTableau>& initial, std::vector<int>* outcomes = nullptr);

std::set<std::size_t> forward_lightcone(const AdaptiveCircuit& c, const std::set<std::size_t>& region,
                                        std::size_t from_layer = 0);
std::set<std::size_t> backward_lightcone(const AdaptiveCircuit& c, const std::set<std::size_t>& region);

/// Lightcone size bound after `depth` layers of fan-in-K gates: K^D for
/// all-to-all, (2(K-1)D + 1)^r on an r-dimensional grid.
double g_value(std::size_t fan_in, std::size_t depth, const Geometry& geometry = Geometry::all_to_all());

/// random_clifford_layers wrapped as a circuit.
AdaptiveCircuit random_clifford_circuit(std::size_t n, std::uint64_t seed);

/// Adaptive GHZ_n preparation: ceil(n/a) blocks joined by ceil(n/a) - 1
/// measured ancillas, each block then filled by a fan-out tree of depth
/// ceil(log_K a). Data qubits are 0..n-1, ancillas follow.
AdaptiveCircuit ghz_adaptive(std::size_t n, std::size_t a, std::size_t fan_in);
/// Fan-out depth ceil(log_K a) used by ghz_adaptive.
std::size_t ghz_fanout_depth(std::size_t a, std::size_t fan_in);

/// Nearest-neighbour variant on a line with K = 2. Each block grows from its
/// centre and an ancilla between neighbouring blocks measures their parity.
/// Qubits are numbered along the line, so ancillas interleave with the data.
AdaptiveCircuit ghz_adaptive_line(std::size_t n, std::size_t a);

}  // namespace adaptstab
