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

#include "adaptstab/correlation.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "adaptstab/densesim.h"
#include "adaptstab/errors.h"
#include "adaptstab/rng.h"

namespace adaptstab {
namespace {

std::vector<std::size_t> all_qubits(std::size_t n) {
    std::vector<std::size_t> out(n);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

// Max over single-site letters of |Cor| through densesim::correlation.
double single_site_max(const StateVector& s, std::size_t i, std::size_t j) {
    double best = 0.0;
    for (char a : std::string("XYZ")) {
        for (char b : std::string("XYZ")) {
            const double c = correlation(s, SupportedOperator::pauli_on({i}, std::string(1, a)),
                                         SupportedOperator::pauli_on({j}, std::string(1, b)));
            best = std::max(best, std::abs(c));
        }
    }
    return best;
}

StateVector random_state(std::size_t n, Rng& rng) {
    Eigen::VectorXcd v(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = {rng.normal(), rng.normal()};
    return StateVector(n, v / v.norm());
}

TEST(CorrelationTest, PauliStrengthExamples) {
    for (std::size_t n = 3; n <= 8; ++n) {
        EXPECT_NEAR(pauli_correlation_strength(ghz_state(n), all_qubits(n)), 1.0, 1e-12);
        EXPECT_NEAR(pauli_correlation_strength(ghz_state(n), {0, n - 1}), 1.0, 1e-12);
    }
    EXPECT_NEAR(pauli_correlation_strength(plus_state(4), all_qubits(4)), 0.0, 1e-12);
    // W(6): X_i X_j gives 2/n, above the Z_i Z_j value 4/n^2.
    const auto w6 = w_state(6);
    EXPECT_NEAR(pauli_correlation_strength(w6, all_qubits(6)), 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(std::abs(correlation(w6, SupportedOperator::pauli_on({0}, "Z"), SupportedOperator::pauli_on({1}, "Z"))),
                4.0 / 36.0, 1e-12);
    EXPECT_THROW(pauli_correlation_strength(w6, {2}), ValidationError);
}

TEST(CorrelationTest, PauliStrengthMatchesDenseOracle) {
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        const auto s = random_state(4, rng);
        double expected = 2.0;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) expected = std::min(expected, single_site_max(s, i, j));
        }
        EXPECT_NEAR(pauli_correlation_strength(s, all_qubits(4)), expected, 1e-12);
    }
}

TEST(CorrelationTest, MaxPauliMatchesDenseEnumeration) {
    Rng rng(6);
    const std::string letters = "IXYZ";
    for (int t = 0; t < 5; ++t) {
        const auto s = random_state(4, rng);
        double expected = 0.0;
        for (int a = 1; a < 16; ++a) {
            for (int b = 1; b < 4; ++b) {
                const std::string first{letters[a & 3], letters[a >> 2]};
                const double c = correlation(s, SupportedOperator::pauli_on({0, 2}, first),
                                             SupportedOperator::pauli_on({3}, std::string(1, letters[b])));
                expected = std::max(expected, std::abs(c));
            }
        }
        EXPECT_NEAR(max_pauli_correlation(s, {0, 2}, {3}).value, expected, 1e-12);
    }
}

TEST(CorrelationTest, AlternatingDominatesPauli) {
    Rng rng(8);
    std::vector<StateVector> states{ghz_state(4), w_state(5), hypergraph_state(4), dicke_state(6, 2)};
    for (int t = 0; t < 6; ++t) states.push_back(random_state(4, rng));
    for (const auto& s : states) {
        const auto pauli = max_pauli_correlation(s, {0}, {s.num_qubits() - 1});
        const auto alt = max_alternating_correlation(s, {0}, {s.num_qubits() - 1});
        EXPECT_LE(pauli.value, alt.value + 1e-9);
        EXPECT_LE(alt.value, 2.0 + 1e-12);
        const auto pauli2 = max_pauli_correlation(s, {0, 1}, {2, 3});
        const auto alt2 = max_alternating_correlation(s, {0, 1}, {2, 3});
        EXPECT_LE(pauli2.value, alt2.value + 1e-9);
    }
}

TEST(CorrelationTest, AlternatingIsReproducible) {
    const auto s = hypergraph_state(5);
    EXPECT_EQ(max_alternating_correlation(s, {0}, {1}).value, max_alternating_correlation(s, {0}, {1}).value);
}

TEST(CorrelationTest, StrengthW) {
    for (std::size_t n = 4; n <= 8; ++n) {
        const auto r = correlation_strength_w(ghz_state(n), all_qubits(n), 1, CorrelationMethod::kPauli);
        EXPECT_NEAR(r.value, 1.0, 1e-12);
    }
    const auto w8 = correlation_strength_w(w_state(8), all_qubits(8), 2, CorrelationMethod::kPauli);
    EXPECT_NEAR(w8.value, 4.0 * 4.0 / 64.0, 1e-12);
    EXPECT_EQ(w8.first_region.size(), 2U);
    EXPECT_EQ(w8.second_region.size(), 2U);
    const auto product = correlation_strength_w(plus_state(6), all_qubits(6), 2, CorrelationMethod::kAlternating);
    EXPECT_NEAR(product.value, 0.0, 1e-9);
    EXPECT_THROW(correlation_strength_w(w_state(8), all_qubits(8), 4, CorrelationMethod::kPauli), ResourceGuardError);
    EXPECT_THROW(correlation_strength_w(w_state(8), {0, 1, 2}, 2, CorrelationMethod::kPauli), ValidationError);
}

TEST(CorrelationTest, RangeExamples) {
    for (std::size_t n = 3; n <= 9; ++n) {
        EXPECT_EQ(pauli_correlation_range(ghz_state(n)), n);
        EXPECT_EQ(pauli_correlation_range(w_state(n)), n);
        EXPECT_EQ(pauli_correlation_range(basis_state(std::string(n, '0'))), 1U);
    }
    // Two Bell pairs: cliques of size 2.
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
    v(0b0000) = v(0b0101) = v(0b1010) = v(0b1111) = 0.5;
    EXPECT_EQ(pauli_correlation_range(StateVector(4, v)), 2U);
}

TEST(CorrelationTest, RangeW) {
    for (std::size_t n = 4; n <= 8; ++n) {
        EXPECT_EQ(correlation_range_w(ghz_state(n), 1, 0.5), n);
        EXPECT_EQ(correlation_range_w(ghz_state(n), 1, 2.0), 1U);
    }
    const auto w8 = w_state(8);
    for (std::size_t w = 1; w <= 2; ++w) {
        std::size_t previous = 8;
        for (double delta : {0.0, 0.05, 0.1, 0.2, 0.25, 0.3, 0.5, 1.0}) {
            const std::size_t r = correlation_range_w(w8, w, delta);
            EXPECT_LE(r, previous);
            EXPECT_GE(r, 2 * w - 1);
            previous = r;
        }
    }
    for (double delta : {0.0, 0.1, 0.3}) {
        EXPECT_LE(correlation_range_w(w8, 1, delta), correlation_range_w(w8, 2, delta));
    }
}

TEST(CorrelationTest, GlobalCorrelation) {
    for (std::size_t n = 3; n <= 8; ++n) {
        const auto g = global_correlation(ghz_state(n));
        EXPECT_NEAR(g.pauli.value, 1.0, 1e-12);
        EXPECT_GE(g.best(), g.pauli.value);
    }
    EXPECT_NEAR(global_correlation(basis_state("0101")).best(), 0.0, 1e-9);
    // HG_n: X_i Z_j reaches 2^{2-n}, above the X_i X_j value 2^{2-n}(1 - 2^{2-n}).
    for (std::size_t n = 3; n <= 8; ++n) {
        const auto g = global_correlation(hypergraph_state(n));
        const double p = std::pow(2.0, 2.0 - static_cast<double>(n));
        EXPECT_NEAR(g.pauli.value, p, 1e-12);
        EXPECT_GE(g.pauli.value, p * (1.0 - p));
        EXPECT_GE(g.alternating.value + 1e-9, g.pauli.value);
    }
}

TEST(CorrelationTest, MaximumClique) {
    EXPECT_EQ(maximum_clique({}).size(), 0U);
    // Triangle 0-1-2 plus pendant 3 attached to 2.
    const std::vector<std::uint64_t> adj{0b0110, 0b0101, 0b1011, 0b0100};
    EXPECT_EQ(maximum_clique(adj), (std::vector<std::size_t>{0, 1, 2}));
    Rng rng(2);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 8;
        std::vector<std::uint64_t> g(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (rng.coin()) {
                    g[i] |= std::uint64_t{1} << j;
                    g[j] |= std::uint64_t{1} << i;
                }
            }
        }
        std::size_t best = 0;
        for (std::uint64_t mask = 1; mask < (1U << n); ++mask) {
            bool clique = true;
            for (std::size_t i = 0; i < n && clique; ++i) {
                if ((mask >> i) & 1U) clique = ((g[i] | (std::uint64_t{1} << i)) & mask) == mask;
            }
            if (clique) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
        }
        EXPECT_EQ(maximum_clique(g).size(), best);
    }
}

TEST(CorrelationTest, MethodNames) {
    EXPECT_EQ(parse_method("pauli"), CorrelationMethod::kPauli);
    EXPECT_EQ(parse_method("alt"), CorrelationMethod::kAlternating);
    EXPECT_THROW(parse_method("bogus"), ParseError);
}

}  // namespace
}  // namespace adaptstab
