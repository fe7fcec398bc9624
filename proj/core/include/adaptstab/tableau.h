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

#include "adaptstab/gates.h"
#include "adaptstab/pauli.h"
#include "adaptstab/rng.h"

namespace adaptstab {

struct MeasurementOutcome {
    int value = 1;  // eigenvalue, +1 or -1
    bool deterministic = false;
};

/// Pure stabilizer state on n qubits with destabilizers kept alongside
/// (destabilizer i anticommutes with generator i only), so measurement and
/// membership queries run in O(n^2) word operations.
class StabilizerTableau {
   public:
    StabilizerTableau() = default;

    static StabilizerTableau zero_state(std::size_t n);
    /// Validates independence, commutation and Hermiticity, then derives
    /// destabilizers. Throws ValidationError on bad input.
    static StabilizerTableau from_generators(std::vector<PauliOperator> generators);
    /// Both halves supplied explicitly (deserialization); every invariant is checked.
    static StabilizerTableau from_rows(std::vector<PauliOperator> generators, std::vector<PauliOperator> destabilizers);

    std::size_t num_qubits() const noexcept { return generators_.size(); }
    const std::vector<PauliOperator>& generators() const noexcept { return generators_; }
    const std::vector<PauliOperator>& destabilizers() const noexcept { return destabilizers_; }

    void apply(const GateApplication& gate);
    void apply_gate(std::string_view name, const std::vector<std::size_t>& qubits,
                    PauliLetter cp_letter = PauliLetter::X);
    void h(std::size_t q) { apply({GateKind::H, {q}}); }
    void s(std::size_t q) { apply({GateKind::S, {q}}); }
    void cnot(std::size_t c, std::size_t t) { apply({GateKind::CNOT, {c, t}}); }
    void cz(std::size_t a, std::size_t b) { apply({GateKind::CZ, {a, b}}); }

    /// Measures a Hermitian Pauli. A random outcome takes `forced` when given,
    /// otherwise a fair coin from rng. Forcing a deterministic outcome to the
    /// other sign throws ContradictionError.
    MeasurementOutcome measure(const PauliOperator& p, std::optional<int> forced, Rng& rng);
    MeasurementOutcome measure(const PauliOperator& p, int forced);

    /// s when s*P is in the stabilizer group, nullopt otherwise.
    std::optional<int> stabilizer_sign(const PauliOperator& p) const;

    void negate_generator(std::size_t index);

    /// Description of the first broken invariant, or nullopt when valid.
    std::optional<std::string> invariant_violation() const;

    /// Tableau on `kept` (in the given order) when the state factors as
    /// |psi_kept> (x) |rest>; throws ValidationError if it is entangled across.
    StabilizerTableau restrict_to(const std::vector<std::size_t>& kept) const;

   private:
    std::vector<PauliOperator> generators_;
    std::vector<PauliOperator> destabilizers_;
};

std::optional<int> is_stabilized_by(const StabilizerTableau& t, const PauliOperator& p);

/// True iff every generator of a stabilizes b with sign +1.
bool states_equal(const StabilizerTableau& a, const StabilizerTableau& b);

StabilizerTableau tensor(const StabilizerTableau& a, const StabilizerTableau& b);

/// Destabilizers for an independent commuting generator list.
std::vector<PauliOperator> compute_destabilizers(const std::vector<PauliOperator>& generators);

/// Row-reduced generator list in block form [[A B], [C 0]] over (x | z) rows:
/// the first `z_rank` rows have linearly independent z parts in reduced
/// echelon form, the remaining rows are X-type and reduced on their x parts.
/// The result depends only on the group, not on the input generator choice.
struct CanonicalForm {
    std::vector<PauliOperator> rows;
    std::size_t z_rank = 0;
};

CanonicalForm canonical_rows(const std::vector<PauliOperator>& generators);
StabilizerTableau canonical_form(const StabilizerTableau& t);

/// 2n rounds of (random single-qubit Clifford layer, random CNOT/CZ pairing layer).
std::vector<std::vector<GateApplication>> random_clifford_layers(std::size_t n, std::uint64_t seed);
/// zero_state(n) evolved by random_clifford_layers(n, seed). Requires n <= 64.
StabilizerTableau random_stabilizer_state(std::size_t n, std::uint64_t seed);

/// All 2^d group elements (with signs) supported inside `subset`, sorted by
/// weight_lex_less. Throws ResourceGuardError when |subset| > 20 and n > 20.
std::vector<PauliOperator> restricted_group_elements(const StabilizerTableau& t,
                                                     const std::vector<std::size_t>& subset);

/// Independent generators of the subgroup supported inside `subset`.
std::vector<PauliOperator> restricted_subgroup_generators(const StabilizerTableau& t,
                                                          const std::vector<std::size_t>& subset);

/// Product of the generators selected by `mask` (bit i selects generator i).
PauliOperator group_element(const std::vector<PauliOperator>& generators, const BitVector& mask);

}  // namespace adaptstab
