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

#include "adaptstab/bounds.h"

#include <gtest/gtest.h>

#include <cmath>

#include "adaptstab/code.h"
#include "adaptstab/correlation.h"
#include "adaptstab/densesim.h"
#include "adaptstab/errors.h"
#include "adaptstab/metrics.h"
#include "adaptstab/prep.h"

namespace adaptstab {
namespace {

StabilizerTableau ghz(std::size_t n) {
    auto t = StabilizerTableau::zero_state(n);
    t.h(0);
    for (std::size_t q = 1; q < n; ++q) t.cnot(0, q);
    return t;
}

ResourceProfile profile(std::size_t n, std::size_t m, std::size_t k, std::size_t depth,
                        Geometry geometry = Geometry::all_to_all()) {
    ResourceProfile p;
    p.n = n;
    p.m = m;
    p.fan_in = k;
    p.depth = depth;
    p.geometry = std::move(geometry);
    return p;
}

TEST(BoundsTest, NonAdaptiveFanOutTree) {
    for (std::size_t n : {2U, 4U, 8U, 16U}) {
        const auto r = check_nonadaptive(profile(n, n, 2, static_cast<std::size_t>(std::log2(n))), n);
        EXPECT_TRUE(r.satisfied);
        EXPECT_DOUBLE_EQ(r.lhs, static_cast<double>(n));
        const auto tree = ghz_adaptive(n, n, 2);
        EXPECT_TRUE(check_nonadaptive(profile_circuit(tree, n), stabilizer_weight(ghz(n))).satisfied);
    }
    EXPECT_FALSE(check_nonadaptive(profile(8, 8, 2, 2), 8).satisfied);
    EXPECT_THROW(check_nonadaptive(profile(8, 9, 2, 5), 8), ValidationError);
}

TEST(BoundsTest, BellPair) {
    const auto r = check_nonadaptive(profile(2, 2, 2, 1), 2);
    EXPECT_TRUE(r.satisfied);
    EXPECT_DOUBLE_EQ(r.lhs, 2.0);
}

TEST(BoundsTest, AdaptiveWeight) {
    const auto c = ghz_adaptive(16, 4, 2);
    const auto p = profile_circuit(c, 16);
    EXPECT_EQ(p.ancillas(), 3U);
    const auto r = check_adaptive_weight(p, 16);
    EXPECT_TRUE(r.satisfied);
    EXPECT_FALSE(r.warning.has_value());
    ASSERT_TRUE(r.conjectured_lhs.has_value());
    EXPECT_DOUBLE_EQ(*r.conjectured_lhs, 4.0 * std::pow(2.0, static_cast<double>(p.depth)));
    // No ancillas: the K^{2L-1} form, with a pointer to the tighter check.
    const auto plain = check_adaptive_weight(profile(8, 8, 2, 3), 8);
    EXPECT_DOUBLE_EQ(plain.lhs, 32.0);
    EXPECT_TRUE(plain.warning.has_value());
    const auto grid = check_adaptive_weight(profile(16, 19, 2, 3, Geometry::grid(1)), 16);
    EXPECT_DOUBLE_EQ(grid.lhs, 4.0 * 11.0);
}

TEST(BoundsTest, NonAdaptiveImpliesAdaptiveWithoutAncillas) {
    for (std::size_t depth = 1; depth <= 5; ++depth) {
        for (double weight = 1; weight <= 40; weight += 3) {
            const auto p = profile(40, 40, 2, depth);
            if (check_nonadaptive(p, weight).satisfied) EXPECT_TRUE(check_adaptive_weight(p, weight).satisfied);
        }
    }
}

TEST(BoundsTest, CliffordAdaptive) {
    for (auto [n, a] : {std::pair{8U, 2U}, {8U, 4U}, {16U, 4U}}) {
        const auto c = ghz_adaptive(n, a, 2);
        const auto r = check_clifford_adaptive(profile_circuit(c, n), n);
        EXPECT_TRUE(r.satisfied);
        // With the fan-out depth alone the product is exactly n here.
        const auto tight = check_clifford_adaptive(profile(n, c.num_qubits(), 2, ghz_fanout_depth(a, 2)), n);
        EXPECT_DOUBLE_EQ(tight.lhs, static_cast<double>(n));
    }
    const auto plan = prepare_state(steane_code());
    const auto steane = check_clifford_adaptive(profile_circuit(plan.circuit, 7), stabilizer_weight(plan.target));
    EXPECT_TRUE(steane.satisfied);
    EXPECT_FALSE(check_clifford_adaptive(profile(16, 17, 2, 2), 16).satisfied);
}

TEST(BoundsTest, Correlation) {
    const auto c = ghz_adaptive(8, 2, 2);
    const auto r = check_correlation(profile_circuit(c, 8), 1, static_cast<double>(pauli_correlation_range(ghz_state(8))));
    EXPECT_TRUE(r.satisfied);
    EXPECT_DOUBLE_EQ(r.rhs, 8.0);
    EXPECT_THROW(check_correlation(profile(8, 8, 2, 1), 5, 8), ValidationError);
    EXPECT_THROW(check_correlation(profile(8, 8, 2, 1), 0, 8), ValidationError);
    EXPECT_NO_THROW(check_correlation(profile(8, 8, 2, 1), 4, 8));
    EXPECT_FALSE(check_correlation(profile(8, 8, 2, 1), 1, 8).satisfied);
}

TEST(BoundsTest, PermutationInvariant) {
    EXPECT_TRUE(is_permutation_invariant(ghz(5)));
    EXPECT_TRUE(is_permutation_invariant(StabilizerTableau::zero_state(3)));
    auto bell_and_zero = StabilizerTableau::zero_state(3);
    bell_and_zero.h(0);
    bell_and_zero.cnot(0, 1);
    EXPECT_FALSE(is_permutation_invariant(bell_and_zero));
    const auto r = check_permutation_invariant(profile_circuit(ghz_adaptive(8, 2, 2), 8));
    EXPECT_TRUE(r.satisfied);
    EXPECT_DOUBLE_EQ(r.rhs, 8.0);
    EXPECT_FALSE(check_permutation_invariant(profile(64, 64, 2, 2)).satisfied);
}

TEST(BoundsTest, ToleranceTable) {
    const auto g = approximate_tolerance_table("ghz", 10);
    EXPECT_DOUBLE_EQ(g.tolerance, 1.0 / 36.0);
    EXPECT_DOUBLE_EQ(*g.closed_form_value, 1.0 / 36.0);
    for (std::size_t n = 3; n <= 12; ++n) {
        const auto h = approximate_tolerance_table("hypergraph", n);
        EXPECT_DOUBLE_EQ(*h.closed_form_value, 1.0 / (9.0 * std::pow(4.0, static_cast<double>(n))));
        EXPECT_GE(h.tolerance, *h.closed_form_value);
    }
    // delta^2/36 re-derived from the measured global correlation.
    const auto measured = global_correlation(ghz_state(6)).pauli.value;
    EXPECT_NEAR(approximate_tolerance_table("ghz", 6).tolerance, measured * measured / 36.0, 1e-12);
    const auto w = approximate_tolerance_table("w", 8);
    EXPECT_NEAR(w.delta, 1.0, 1e-12);
    const auto d = approximate_tolerance_table("dicke", 8, 2);
    EXPECT_GT(d.delta, 0.0);
    EXPECT_THROW(approximate_tolerance_table("bogus", 4), ValidationError);
}

TEST(BoundsTest, GridProfileUsesGridLightcone) {
    const auto c = ghz_adaptive_line(9, 3);
    const auto all = check_adaptive_weight(profile_circuit(c, 9), 9);
    const auto line = check_adaptive_weight(profile_circuit(c, 9, 2, Geometry::grid(1)), 9);
    EXPECT_TRUE(line.satisfied);
    EXPECT_LE(line.lhs, all.lhs);
}

}  // namespace
}  // namespace adaptstab
