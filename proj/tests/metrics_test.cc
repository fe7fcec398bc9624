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

#include "adaptstab/metrics.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "adaptstab/code.h"
#include "adaptstab/correlation.h"
#include "adaptstab/densesim.h"
#include "adaptstab/errors.h"
#include "adaptstab/rng.h"
#include "oracles.h"

namespace adaptstab {
namespace {

StabilizerTableau ghz(std::size_t n) {
    auto t = StabilizerTableau::zero_state(n);
    t.h(0);
    for (std::size_t q = 1; q < n; ++q) t.cnot(0, q);
    return t;
}

// Smallest heaviest-first weight vector over every independent n-subset of
// the group, by exhaustive search.
WeightVector brute_force_min_vector(const StabilizerTableau& t) {
    const std::size_t n = t.num_qubits();
    auto group = testing::group_by_products(t.generators());
    group.erase(group.begin());  // identity
    std::vector<int> pick(group.size(), 0);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(n), 1);
    std::sort(pick.begin(), pick.end());
    std::optional<WeightVector> best;
    do {
        Gf2Basis basis(2 * n);
        WeightVector weights;
        bool independent = true;
        for (std::size_t i = 0; i < group.size() && independent; ++i) {
            if (!pick[i]) continue;
            independent = basis.insert(group[i].symplectic_row());
            weights.push_back(group[i].weight());
        }
        if (!independent) continue;
        std::sort(weights.rbegin(), weights.rend());
        if (!best || weight_vector_less(weights, *best)) best = weights;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return *best;
}

StabilizerTableau steane_zero() {
    auto checks = steane_code().checks();
    checks.push_back(PauliOperator::parse("ZZZZZZZ"));
    return StabilizerTableau::from_generators(checks);
}

TEST(WeightTest, Examples) {
    EXPECT_EQ(min_weight_generators(StabilizerTableau::zero_state(5)).weights, WeightVector(5, 1));
    for (std::size_t n = 3; n <= 8; ++n) {
        WeightVector expected(n, 2);
        expected[0] = n;
        EXPECT_EQ(min_weight_generators(ghz(n)).weights, expected);
        EXPECT_EQ(stabilizer_weight(ghz(n)), n);
    }
    EXPECT_EQ(min_weight_generators(ghz(2)).weights, (WeightVector{2, 2}));
    EXPECT_EQ(stabilizer_weight(StabilizerTableau::zero_state(4)), 1U);
    EXPECT_EQ(stabilizer_weight(steane_zero()), 4U);
}

TEST(WeightTest, GeneratorsGenerateTheState) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto t = random_stabilizer_state(6, seed);
        const auto mg = min_weight_generators(t);
        ASSERT_EQ(mg.generators.size(), 6U);
        for (std::size_t i = 0; i < mg.generators.size(); ++i) {
            EXPECT_EQ(mg.generators[i].weight(), mg.weights[i]);
            EXPECT_EQ(is_stabilized_by(t, mg.generators[i]), 1);
        }
        EXPECT_TRUE(states_equal(t, StabilizerTableau::from_generators(mg.generators)));
        EXPECT_TRUE(std::is_sorted(mg.weights.rbegin(), mg.weights.rend()));
    }
}

TEST(WeightTest, GreedyMatchesExhaustiveSearch) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto t = random_stabilizer_state(2 + seed % 3, seed);
        ASSERT_EQ(min_weight_generators(t).weights, brute_force_min_vector(t)) << "seed " << seed;
    }
}

TEST(WeightTest, GreedyMatchesRankOracle) {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const std::size_t n = 1 + seed % 6;
        const auto t = random_stabilizer_state(n, seed * 7 + 1);
        const auto weights = min_weight_generators(t).weights;
        for (std::size_t k = 1; k <= n; ++k) ASSERT_EQ(weight_vector_oracle(t, k), weights[k - 1]);
    }
    EXPECT_EQ(weight_vector_oracle(ghz(4), 1), 4U);
}

TEST(WeightTest, InvariantUnderPermutationAndLocalCliffords) {
    Rng rng(21);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 3 + seed % 4;
        const auto t = random_stabilizer_state(n, seed);
        const auto reference = min_weight_generators(t).weights;
        auto moved = t;
        for (int step = 0; step < 10; ++step) {
            const std::size_t a = rng.below(n);
            const std::size_t b = rng.below(n);
            if (a != b) moved.apply({GateKind::SWAP, {a, b}});
            moved.apply({rng.coin() ? GateKind::H : GateKind::S, {rng.below(n)}});
        }
        EXPECT_EQ(min_weight_generators(moved).weights, reference);
    }
}

TEST(WeightTest, SizeGuards) {
    EXPECT_THROW(min_weight_generators(StabilizerTableau::zero_state(21)), ResourceGuardError);
    EXPECT_THROW(weight_vector_oracle(StabilizerTableau::zero_state(15), 1), ResourceGuardError);
}

TEST(AntiShallownessTest, GhzInterval) {
    for (std::size_t n = 3; n <= 10; ++n) {
        EXPECT_NEAR(anti_shallowness_lower(ghz_state(n)), std::log2(36.0 / 35.0), 1e-12);
        EXPECT_NEAR(anti_shallowness_upper(ghz_state(n), {basis_state(std::string(n, '0'))}), 1.0, 1e-12);
    }
    EXPECT_NEAR(std::log2(36.0 / 35.0), 0.04064, 1e-5);
}

TEST(AntiShallownessTest, ProductStateIsZero) {
    EXPECT_NEAR(anti_shallowness_lower(plus_state(4)), 0.0, 1e-12);
    EXPECT_NEAR(anti_shallowness_upper(plus_state(4), {plus_state(4)}), 0.0, 1e-12);
}

TEST(AntiShallownessTest, Hypergraph) {
    for (std::size_t n = 3; n <= 10; ++n) {
        const double nn = static_cast<double>(n);
        const double xx = std::pow(2.0, 2.0 - nn) - std::pow(2.0, 4.0 - 2.0 * nn);
        const double from_xx = -std::log2(1.0 - xx * xx / 36.0);
        EXPECT_NEAR(anti_shallowness_lower_from(xx), from_xx, 1e-15);
        // The strongest single-site Pauli pair beats X,X, so the bound only improves.
        EXPECT_GE(anti_shallowness_lower(hypergraph_state(n)), from_xx);
        const double overlap = 1.0 - std::pow(2.0, 1.0 - nn);
        EXPECT_NEAR(anti_shallowness_upper(hypergraph_state(n), {plus_state(n)}), -2.0 * std::log2(overlap), 1e-12);
    }
}

TEST(AntiShallownessTest, LowerNeverExceedsUpper) {
    ProductSearchOptions search;
    search.enabled = true;
    for (std::size_t n = 3; n <= 10; ++n) {
        for (const auto& s : {ghz_state(n), hypergraph_state(n)}) {
            const std::vector<StateVector> candidates{basis_state(std::string(n, '0')), plus_state(n)};
            EXPECT_LE(anti_shallowness_lower(s), anti_shallowness_upper(s, candidates, search) + 1e-12);
        }
    }
}

TEST(AntiShallownessTest, SelfCandidateGivesZero) {
    EXPECT_NEAR(anti_shallowness_upper(w_state(5), {w_state(5)}), 0.0, 1e-12);
    EXPECT_THROW(anti_shallowness_upper(w_state(5), {}), ValidationError);
}

TEST(AntiShallownessTest, ProductSearchIsAtLeastCandidateFidelity) {
    ProductSearchOptions search;
    search.enabled = true;
    for (std::size_t n = 2; n <= 6; ++n) {
        EXPECT_GE(best_product_fidelity(hypergraph_state(n), search) + 1e-12, fidelity(hypergraph_state(n), plus_state(n)));
        EXPECT_NEAR(best_product_fidelity(plus_state(n), search), 1.0, 1e-9);
    }
}

TEST(AntiShallownessTest, Continuity) {
    for (double log_f : {0.0, -0.3, -1.0, -4.0}) {
        EXPECT_NEAR(anti_shallowness_continuity(log_f, 0.0), -log_f, 1e-12);
        EXPECT_NEAR(anti_shallowness_continuity(log_f, 1.0), 0.0, 1e-12);
        double previous = anti_shallowness_continuity(log_f, 0.0);
        for (int i = 1; i <= 200; ++i) {
            const double current = anti_shallowness_continuity(log_f, i / 200.0);
            EXPECT_LE(current, previous + 1e-15);
            EXPECT_GE(current, 0.0);
            previous = current;
        }
    }
    EXPECT_THROW(anti_shallowness_continuity(-1.0, 1.5), ValidationError);
    EXPECT_THROW(anti_shallowness_continuity(0.5, 0.1), ValidationError);
}

TEST(ContinuityTest, IdenticalStates) {
    const auto s = ghz_state(4);
    const auto r = correlation_continuity_check(s, s, SupportedOperator::pauli_on({0}, "Z"),
                                                SupportedOperator::pauli_on({3}, "Z"));
    EXPECT_NEAR(r.lhs, 0.0, 1e-12);
    EXPECT_NEAR(r.rhs, 0.0, 1e-6);
    EXPECT_TRUE(r.holds);
}

TEST(ContinuityTest, RotatedGhz) {
    const auto s = ghz_state(6);
    Eigen::Matrix2cd ry;
    ry << std::cos(0.05), -std::sin(0.05), std::sin(0.05), std::cos(0.05);
    const auto rotated = apply_single_qubit(s, 2, ry);
    const auto r = correlation_continuity_check(s, rotated, SupportedOperator::pauli_on({0}, "Z"),
                                                SupportedOperator::pauli_on({2}, "Z"));
    EXPECT_GT(r.lhs, 0.0);
    EXPECT_TRUE(r.holds);
}

TEST(ContinuityTest, RandomPerturbations) {
    Rng rng(12);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 3 + rng.below(3);
        Eigen::VectorXcd a(Eigen::Index{1} << n);
        for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = {rng.normal(), rng.normal()};
        a /= a.norm();
        Eigen::VectorXcd b = a;
        const double scale = std::pow(10.0, -3.0 * rng.uniform());
        for (Eigen::Index i = 0; i < b.size(); ++i) b(i) += scale * std::complex<double>(rng.normal(), rng.normal());
        b /= b.norm();
        const StateVector s1(n, a);
        const StateVector s2(n, b);
        const auto r = correlation_continuity_check(s1, s2, SupportedOperator::pauli_on({0, 1}, "XY"),
                                                    SupportedOperator::pauli_on({n - 1}, "Z"));
        ASSERT_TRUE(r.holds) << r.lhs << " > " << r.rhs;
    }
}

TEST(IndistinguishabilityTest, GhzSignFlip) {
    const auto plus = ghz(4);
    const auto minus = flip_generator_sign(plus, 0);
    ASSERT_EQ(plus.generators()[0].to_string(), "+XXXX");
    EXPECT_EQ(is_stabilized_by(minus, PauliOperator::parse("XXXX")), -1);
    for (std::size_t k = 1; k <= 3; ++k) EXPECT_TRUE(local_indistinguishable(plus, minus, k));
    EXPECT_FALSE(local_indistinguishable(plus, minus, 4));
    EXPECT_FALSE(states_equal(plus, minus));
    auto one = StabilizerTableau::zero_state(1);
    one.apply({GateKind::X, {0}});
    EXPECT_FALSE(local_indistinguishable(StabilizerTableau::zero_state(1), one, 1));
}

TEST(IndistinguishabilityTest, ReducedDensityMatricesAgree) {
    const auto a = state_from_tableau(ghz(4));
    const auto b = state_from_tableau(flip_generator_sign(ghz(4), 0));
    const auto ra = reduced_density_matrix(a, {0, 1, 3});
    const auto rb = reduced_density_matrix(b, {0, 1, 3});
    EXPECT_LT((ra - rb).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(fidelity(a, b), 0.0, 1e-12);
}

TEST(WeightRangeTest, Examples) {
    const auto g = weight_range_check(ghz(6));
    EXPECT_EQ(g.stabilizer_weight, 6U);
    EXPECT_EQ(g.correlation_range, 6U);
    EXPECT_TRUE(g.holds);
    const auto z = weight_range_check(StabilizerTableau::zero_state(4));
    EXPECT_EQ(z.correlation_range, 1U);
    EXPECT_TRUE(z.holds);
}

TEST(WeightRangeTest, RandomStates) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto r = weight_range_check(random_stabilizer_state(2 + seed % 7, seed));
        ASSERT_TRUE(r.holds) << "seed " << seed;
        ASSERT_GE(static_cast<double>(r.stabilizer_weight), r.bound);
    }
}

TEST(GrowthTest, Examples) {
    const auto cnot = operator_growth_check(PauliOperator::parse("XI"), {{GateKind::CNOT, {0, 1}}}, 2);
    EXPECT_EQ(cnot.after, 2U);
    EXPECT_TRUE(cnot.holds);
    const auto idle = operator_growth_check(PauliOperator::parse("XYZ"), {}, 2);
    EXPECT_EQ(idle.after, idle.before);
}

TEST(GrowthTest, RandomLayers) {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t k = 2 + rng.below(2);
        const std::size_t n = 4 + rng.below(8);
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng.engine());
        std::vector<GateApplication> layer;
        for (std::size_t i = 0; i + k <= n; i += k) {
            std::vector<std::size_t> qubits(order.begin() + static_cast<long>(i), order.begin() + static_cast<long>(i + k));
            if (k == 3) {
                layer.push_back({GateKind::CNOT, qubits});
            } else {
                const GateKind kinds[] = {GateKind::CNOT, GateKind::CZ, GateKind::SWAP};
                layer.push_back({kinds[rng.below(3)], qubits});
            }
        }
        PauliOperator p(n);
        for (std::size_t q = 0; q < n; ++q) p.set_letter(q, static_cast<PauliLetter>(rng.below(4)));
        ASSERT_TRUE(operator_growth_check(p, layer, k).holds);
    }
}

}  // namespace
}  // namespace adaptstab
