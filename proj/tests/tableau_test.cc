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

#include "adaptstab/tableau.h"

#include <gtest/gtest.h>

#include <set>

#include "adaptstab/errors.h"
#include "adaptstab/rng.h"
#include "oracles.h"

namespace adaptstab {
namespace {

using testing::Mat;

StabilizerTableau ghz(std::size_t n) {
    auto t = StabilizerTableau::zero_state(n);
    t.h(0);
    for (std::size_t q = 1; q < n; ++q) t.cnot(0, q);
    return t;
}

std::vector<std::string> strings(const std::vector<PauliOperator>& ops) {
    std::vector<std::string> out;
    for (const auto& p : ops) out.push_back(p.to_string());
    return out;
}

Mat dense_state(std::size_t n, const std::vector<std::vector<GateApplication>>& layers) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    psi(0) = 1.0;
    for (const auto& layer : layers) {
        for (const auto& g : layer) {
            psi = testing::embed(n, g.qubits, testing::gate_unitary(std::string(gate_name(g.kind)), to_char(g.letter))) *
                  psi;
        }
    }
    return psi * psi.adjoint();
}

TEST(TableauTest, ZeroState) {
    EXPECT_EQ(strings(StabilizerTableau::zero_state(1).generators()), (std::vector<std::string>{"+Z"}));
    EXPECT_EQ(strings(StabilizerTableau::zero_state(3).generators()),
              (std::vector<std::string>{"+ZII", "+IZI", "+IIZ"}));
    EXPECT_EQ(is_stabilized_by(StabilizerTableau::zero_state(2), PauliOperator::parse("ZZ")), 1);
}

TEST(TableauTest, Membership) {
    const auto g = ghz(3);
    EXPECT_EQ(is_stabilized_by(g, PauliOperator::parse("XXX")), 1);
    EXPECT_EQ(is_stabilized_by(g, PauliOperator::parse("ZZZ")), std::nullopt);
    EXPECT_EQ(is_stabilized_by(g, PauliOperator::parse("-YYX")), 1);
    auto one = StabilizerTableau::zero_state(1);
    one.apply({GateKind::X, {0}});
    EXPECT_EQ(is_stabilized_by(one, PauliOperator::parse("Z")), -1);
}

TEST(TableauTest, MembershipMatchesGroupEnumeration) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto t = random_stabilizer_state(3, seed);
        std::set<std::string> group;
        for (const auto& p : testing::group_by_products(t.generators())) group.insert(p.to_string());
        for (std::uint64_t idx = 0; idx < 64; ++idx) {
            PauliOperator p(3);
            for (std::size_t q = 0; q < 3; ++q) p.set_letter(q, static_cast<PauliLetter>((idx >> (2 * q)) & 3U));
            auto neg = p;
            neg.negate();
            const auto sign = is_stabilized_by(t, p);
            if (group.count(p.to_string())) {
                ASSERT_EQ(sign, 1);
            } else if (group.count(neg.to_string())) {
                ASSERT_EQ(sign, -1);
            } else {
                ASSERT_EQ(sign, std::nullopt);
            }
        }
    }
}

TEST(TableauTest, StatesEqual) {
    auto plus = StabilizerTableau::zero_state(1);
    plus.h(0);
    EXPECT_TRUE(states_equal(plus, StabilizerTableau::from_generators({PauliOperator::parse("X")})));
    auto one = StabilizerTableau::zero_state(1);
    one.apply({GateKind::X, {0}});
    EXPECT_FALSE(states_equal(StabilizerTableau::zero_state(1), one));
    // GHZ8 via a chain and via a star.
    auto chain = StabilizerTableau::zero_state(8);
    chain.h(0);
    for (std::size_t q = 1; q < 8; ++q) chain.cnot(q - 1, q);
    EXPECT_TRUE(states_equal(chain, ghz(8)));
}

TEST(TableauTest, StatesEqualIsEquivalence) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto a = random_stabilizer_state(4, seed);
        const auto b = canonical_form(a);
        const auto c = random_stabilizer_state(4, seed + 100);
        EXPECT_TRUE(states_equal(a, a));
        EXPECT_TRUE(states_equal(a, b));
        EXPECT_TRUE(states_equal(b, a));
        EXPECT_EQ(states_equal(a, c), states_equal(c, a));
    }
}

TEST(TableauTest, CanonicalForm) {
    const auto z = canonical_rows(StabilizerTableau::zero_state(3).generators());
    EXPECT_EQ(strings(z.rows), (std::vector<std::string>{"+ZII", "+IZI", "+IIZ"}));
    EXPECT_EQ(z.z_rank, 3U);
    const auto bell = StabilizerTableau::from_generators({PauliOperator::parse("ZZ"), PauliOperator::parse("XX")});
    EXPECT_EQ(strings(canonical_form(bell).generators()), (std::vector<std::string>{"+ZZ", "+XX"}));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto t = random_stabilizer_state(5, seed);
        const auto once = canonical_form(t);
        EXPECT_EQ(strings(canonical_form(once).generators()), strings(once.generators()));
        EXPECT_TRUE(states_equal(t, once));
        EXPECT_FALSE(once.invariant_violation().has_value());
    }
}

TEST(TableauTest, CanonicalFormDependsOnlyOnGroup) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto t = random_stabilizer_state(4, seed);
        auto gens = t.generators();
        for (std::size_t i = 1; i < gens.size(); ++i) gens[i] = gens[i] * gens[i - 1];
        std::reverse(gens.begin(), gens.end());
        EXPECT_EQ(strings(canonical_rows(gens).rows), strings(canonical_rows(t.generators()).rows));
    }
}

TEST(TableauTest, RandomStateReproducibleAndCoversSingleQubitStates) {
    EXPECT_TRUE(states_equal(random_stabilizer_state(6, 42), random_stabilizer_state(6, 42)));
    std::set<std::string> seen;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto t = random_stabilizer_state(1, seed);
        EXPECT_FALSE(t.invariant_violation().has_value());
        seen.insert(t.generators()[0].to_string());
    }
    EXPECT_EQ(seen, (std::set<std::string>{"+X", "-X", "+Y", "-Y", "+Z", "-Z"}));
}

TEST(TableauTest, RestrictedGroupElements) {
    EXPECT_EQ(strings(restricted_group_elements(ghz(3), {0, 1})), (std::vector<std::string>{"+III", "+ZZI"}));
    EXPECT_EQ(strings(restricted_group_elements(StabilizerTableau::zero_state(2), {0})),
              (std::vector<std::string>{"+II", "+ZI"}));
    EXPECT_EQ(strings(restricted_group_elements(ghz(2), {0})), (std::vector<std::string>{"+II"}));
}

TEST(TableauTest, RestrictedElementsMatchBruteForce) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto t = random_stabilizer_state(4, seed);
        const std::vector<std::size_t> subset{1, 3};
        std::set<std::string> expected;
        for (const auto& p : testing::group_by_products(t.generators())) {
            if (!p.x().get(0) && !p.z().get(0) && !p.x().get(2) && !p.z().get(2)) expected.insert(p.to_string());
        }
        const auto got = strings(restricted_group_elements(t, subset));
        EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), expected);
    }
}

TEST(TableauTest, AgreesWithDenseSimulation) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 1 + seed % 6;
        const auto layers = random_clifford_layers(n, seed);
        auto t = StabilizerTableau::zero_state(n);
        for (const auto& layer : layers) {
            for (const auto& g : layer) t.apply(g);
        }
        const Mat expected = dense_state(n, layers);
        const Mat projector = testing::stabilizer_projector(t);
        ASSERT_LT((projector - expected).cwiseAbs().maxCoeff(), 1e-12) << "seed " << seed;
    }
}

TEST(TableauTest, InvariantsSurviveGatesAndMeasurements) {
    Rng rng(17);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t n = 2 + seed % 6;
        auto t = random_stabilizer_state(n, seed);
        for (int step = 0; step < 20; ++step) {
            PauliOperator p(n);
            for (std::size_t q = 0; q < n; ++q) p.set_letter(q, static_cast<PauliLetter>(rng.below(4)));
            if (p.is_identity_up_to_phase()) continue;
            const auto first = t.measure(p, std::nullopt, rng);
            ASSERT_FALSE(t.invariant_violation().has_value()) << *t.invariant_violation();
            const auto again = t.measure(p, std::nullopt, rng);
            ASSERT_TRUE(again.deterministic);
            ASSERT_EQ(again.value, first.value);
            t.apply({GateKind::H, {rng.below(n)}});
            t.apply({GateKind::CZ, {0, 1}});
            ASSERT_FALSE(t.invariant_violation().has_value());
        }
    }
}

TEST(TableauTest, MeasuringGeneratorIsDeterministic) {
    Rng rng(1);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto t = random_stabilizer_state(5, seed);
        for (const auto& g : std::vector<PauliOperator>(t.generators())) {
            const auto out = t.measure(g, std::nullopt, rng);
            EXPECT_TRUE(out.deterministic);
            EXPECT_EQ(out.value, 1);
        }
    }
}

TEST(TableauTest, ForcedOutcomes) {
    auto t = StabilizerTableau::zero_state(2);
    t.h(0);
    const auto out = t.measure(PauliOperator::parse("ZI"), -1);
    EXPECT_FALSE(out.deterministic);
    EXPECT_EQ(out.value, -1);
    EXPECT_EQ(is_stabilized_by(t, PauliOperator::parse("ZI")), -1);
    EXPECT_THROW(t.measure(PauliOperator::parse("IZ"), -1), ContradictionError);
}

TEST(TableauTest, FromGeneratorsValidates) {
    EXPECT_THROW(StabilizerTableau::from_generators({PauliOperator::parse("XI"), PauliOperator::parse("ZI")}),
                 ValidationError);
    EXPECT_THROW(StabilizerTableau::from_generators({PauliOperator::parse("ZZ"), PauliOperator::parse("-ZZ")}),
                 ValidationError);
    EXPECT_THROW(StabilizerTableau::from_generators({PauliOperator::parse("+iZ")}), ValidationError);
}

TEST(TableauTest, TensorAndRestrict) {
    const auto joint = tensor(ghz(2), StabilizerTableau::zero_state(1));
    EXPECT_EQ(joint.num_qubits(), 3U);
    EXPECT_EQ(is_stabilized_by(joint, PauliOperator::parse("XXI")), 1);
    EXPECT_TRUE(states_equal(joint.restrict_to({0, 1}), ghz(2)));
    EXPECT_THROW(ghz(3).restrict_to({0, 1}), ValidationError);
}

}  // namespace
}  // namespace adaptstab
