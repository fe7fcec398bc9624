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
#include <optional>
#include <string>
#include <vector>

#include "adaptstab/circuit.h"
#include "adaptstab/tableau.h"

namespace adaptstab {

/// Resources of a preparation circuit: n target qubits out of m, fan-in K and
/// depth L (measurement layers included).
struct ResourceProfile {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t fan_in = 2;
    std::size_t depth = 0;
    Geometry geometry;

    std::size_t ancillas() const noexcept { return m - n; }
};

/// Profile of a circuit; fan-in defaults to the largest gate (at least 2).
ResourceProfile profile_circuit(const AdaptiveCircuit& c, std::size_t n_target,
                                std::optional<std::size_t> fan_in = std::nullopt,
                                const Geometry& geometry = Geometry::all_to_all());

struct BoundResult {
    std::string check;
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
    std::optional<std::string> warning;
    /// Conjectured tighter left-hand side; informational only.
    std::optional<double> conjectured_lhs;
    ResourceProfile profile;
};

/// g(K, L) >= wt_s for circuits without measurements. Throws ValidationError
/// when the profile has ancillas.
BoundResult check_nonadaptive(const ResourceProfile& profile, double weight);

/// (n_a + 1) g(K, 2L - 1) >= wt for any adaptive circuit.
BoundResult check_adaptive_weight(const ResourceProfile& profile, double weight);

/// (n_a + 1) g(K, L) >= wt_s for Clifford adaptive circuits.
BoundResult check_clifford_adaptive(const ResourceProfile& profile, double stabilizer_weight);

/// (n_a + w) g(K, 2L - 1) + w - 1 >= CR_w. Requires 1 <= w <= n / 2.
BoundResult check_correlation(const ResourceProfile& profile, std::size_t w, double correlation_range);

/// (n_a + 1) g(K, 2L - 1) >= n for permutation-invariant, non-product states.
BoundResult check_permutation_invariant(const ResourceProfile& profile);

/// Invariance under every transposition of neighbouring qubits.
bool is_permutation_invariant(const StabilizerTableau& t);

struct ToleranceRow {
    std::string family;
    std::size_t n = 0;
    double delta = 0.0;      // correlation strength used
    double tolerance = 0.0;  // delta^2 / 36
    std::string closed_form;
    std::optional<double> closed_form_value;
};

/// Tolerable infidelity keeping the correlation-based lower bounds valid, for
/// "ghz", "w", "dicke" (with k) and "hypergraph".
ToleranceRow approximate_tolerance_table(std::string_view family, std::size_t n, std::size_t k = 1);

}  // namespace adaptstab
