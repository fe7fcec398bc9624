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
#include <vector>

#include "adaptstab/correlation.h"
#include "adaptstab/densesim.h"
#include "adaptstab/gates.h"
#include "adaptstab/tableau.h"

namespace adaptstab {

/// Generator weights sorted non-increasingly.
using WeightVector = std::vector<std::size_t>;

/// Lexicographic comparison of two non-increasing weight vectors.
bool weight_vector_less(const WeightVector& a, const WeightVector& b);

struct MinimalGenerators {
    std::vector<PauliOperator> generators;  // heaviest first, matching `weights`
    WeightVector weights;
};

/// Minimum-weight generating set via matroid greedy over all 2^n - 1
/// non-identity group elements. Throws ResourceGuardError for n > 20.
MinimalGenerators min_weight_generators(const StabilizerTableau& t);

/// Largest entry of the minimal weight vector.
std::size_t stabilizer_weight(const StabilizerTableau& t);

/// Independent rank-threshold evaluation of entry k (1-based) of the minimal
/// weight vector. Throws ResourceGuardError for n > 14.
std::size_t weight_vector_oracle(const StabilizerTableau& t, std::size_t k);

/// -log2(1 - cor^2 / 36).
double anti_shallowness_lower_from(double correlation);
/// anti_shallowness_lower_from applied to the Pauli global correlation.
double anti_shallowness_lower(const StateVector& s);

struct ProductSearchOptions {
    bool enabled = false;
    std::size_t restarts = 4;
    std::size_t sweeps = 200;
    std::uint64_t seed = 11;
};

/// Best fidelity with a product state found by alternating single-site
/// updates from random starts, each sweep non-decreasing.
double best_product_fidelity(const StateVector& s, const ProductSearchOptions& options);

/// Minimum of -log2 F over the candidates and, when enabled, the best product
/// state found. Throws ValidationError when nothing is given to compare with.
double anti_shallowness_upper(const StateVector& s, const std::vector<StateVector>& candidates,
                              const ProductSearchOptions& product = {});

/// Anti-shallowness guaranteed for a state within infidelity eps of one with
/// -log2 F = -log_f, clamped below at 0. Takes log_f = log2 F <= 0.
double anti_shallowness_continuity(double log_f, double eps);

struct InequalityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

/// |Cor(O1,O2,s1) - Cor(O1,O2,s2)| <= 6 sqrt(1 - F(s1, s2)).
InequalityCheck correlation_continuity_check(const StateVector& s1, const StateVector& s2,
                                             const SupportedOperator& o1, const SupportedOperator& o2);

StabilizerTableau flip_generator_sign(const StabilizerTableau& t, std::size_t index);

/// True when both states have the same signed group elements on every region
/// of at most k qubits.
bool local_indistinguishable(const StabilizerTableau& a, const StabilizerTableau& b, std::size_t k);

struct WeightRangeCheck {
    std::size_t stabilizer_weight = 0;
    std::size_t correlation_range = 0;
    double bound = 0.0;  // CR_P / sqrt(n)
    bool holds = false;
};

/// wt_s >= CR_P / sqrt(n). Throws ResourceGuardError for n > 12.
WeightRangeCheck weight_range_check(const StabilizerTableau& t);

struct GrowthCheck {
    std::size_t before = 0;
    std::size_t after = 0;
    std::size_t fan_in = 0;
    bool holds = false;
};

/// Conjugates p by one layer of gates (disjoint supports, fan-in <= K) and
/// checks wt(U P U^dagger) <= K wt(P).
GrowthCheck operator_growth_check(const PauliOperator& p, const std::vector<GateApplication>& layer,
                                  std::size_t fan_in);

}  // namespace adaptstab
