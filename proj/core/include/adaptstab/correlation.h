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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "adaptstab/densesim.h"

namespace adaptstab {

/// Both methods return certified lower bounds on the supremum over all
/// operators of norm at most one.
enum class CorrelationMethod { kPauli, kAlternating };

std::string_view method_name(CorrelationMethod method);
CorrelationMethod parse_method(std::string_view name);

struct CorrelationOptions {
    std::uint64_t seed = 7;
    std::size_t restarts = 8;
    std::size_t max_iterations = 500;
    double convergence = 1e-12;
};

/// Best operator pair found for one pair of disjoint regions.
struct PairCorrelation {
    double value = 0.0;
    std::string first;   // Pauli letters on the first region, or "sign-op"
    std::string second;
};

/// Max |Cor| over Pauli strings on a1 and a2 (each not the identity).
PairCorrelation max_pauli_correlation(const StateVector& s, const std::vector<std::size_t>& a1,
                                      const std::vector<std::size_t>& a2);

/// Alternating sign-operator ascent on Delta = rho_12 - rho_1 (x) rho_2, seeded
/// with the best Pauli pair and `restarts` random operators.
PairCorrelation max_alternating_correlation(const StateVector& s, const std::vector<std::size_t>& a1,
                                            const std::vector<std::size_t>& a2,
                                            const CorrelationOptions& options = {});

struct CorrelationReport {
    std::vector<std::size_t> region;
    std::size_t w = 1;
    CorrelationMethod method = CorrelationMethod::kPauli;
    double value = 0.0;
    /// The disjoint pair attaining the minimum, with its maximizing operators.
    std::vector<std::size_t> first_region;
    std::vector<std::size_t> second_region;
    PairCorrelation pair;
};

/// Minimum over disjoint A1, A2 inside `region` with |A1| = |A2| = w of the
/// per-pair maximum. Pauli enumeration requires w <= 3.
CorrelationReport correlation_strength_w(const StateVector& s, const std::vector<std::size_t>& region, std::size_t w,
                                         CorrelationMethod method, const CorrelationOptions& options = {});

/// w = 1 Pauli strength restricted to single-site X/Y/Z operators.
double pauli_correlation_strength(const StateVector& s, const std::vector<std::size_t>& region);

/// Largest region whose pairwise Pauli correlations all exceed `tolerance`
/// (a maximum clique); 1 when no pair is correlated.
std::size_t pauli_correlation_range(const StateVector& s, double tolerance = 1e-9);

/// Largest region with strength above delta. Regions smaller than 2w have no
/// disjoint pair and count vacuously, so the result is at least min(n, 2w - 1).
std::size_t correlation_range_w(const StateVector& s, std::size_t w, double delta,
                                CorrelationMethod method = CorrelationMethod::kPauli,
                                const CorrelationOptions& options = {});

struct GlobalCorrelation {
    CorrelationReport pauli;
    CorrelationReport alternating;
    double best() const { return std::max(pauli.value, alternating.value); }
};

/// Strength on the whole register with w = 1.
GlobalCorrelation global_correlation(const StateVector& s, const CorrelationOptions& options = {});

/// Maximum clique of an undirected graph given as adjacency bit masks (n <= 64).
std::vector<std::size_t> maximum_clique(const std::vector<std::uint64_t>& adjacency);

}  // namespace adaptstab
