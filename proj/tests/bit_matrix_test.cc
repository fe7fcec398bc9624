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

#include "adaptstab/bit_matrix.h"

#include <gtest/gtest.h>

#include <cstdint>
#include <set>

#include "adaptstab/rng.h"

namespace adaptstab {
namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.coin());
    }
    return m;
}

// Rank by exhaustive span size, for tiny matrices.
std::size_t rank_by_span(const BitMatrix& m) {
    std::set<std::string> span;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.rows()); ++mask) {
        BitVector v(m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if ((mask >> r) & 1U) v ^= m.row(r);
        }
        span.insert(v.to_string());
    }
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < span.size()) ++rank;
    return rank;
}

TEST(BitVectorTest, StringRoundTrip) {
    const auto v = BitVector::from_string("1011001");
    EXPECT_EQ(v.to_string(), "1011001");
    EXPECT_EQ(v.popcount(), 4U);
    EXPECT_EQ(v.first_set(), 0U);
    EXPECT_EQ(BitVector(5).first_set(), 5U);
}

TEST(BitVectorTest, WordBoundary) {
    BitVector v(130);
    v.set(64, true);
    v.set(129, true);
    EXPECT_EQ(v.popcount(), 2U);
    EXPECT_EQ(v.first_set(), 64U);
    EXPECT_EQ(v.slice(64, 66).popcount(), 2U);
    EXPECT_FALSE(v.dot(v));  // even overlap
}

TEST(BitVectorTest, ConcatAndSlice) {
    const auto a = BitVector::from_string("101");
    const auto b = BitVector::from_string("0011");
    const auto c = a.concat(b);
    EXPECT_EQ(c.to_string(), "1010011");
    EXPECT_EQ(c.slice(3, 4), b);
}

TEST(BitMatrixTest, KnownRanks) {
    EXPECT_EQ(gf2_rank(BitMatrix::identity(5)), 5U);
    BitMatrix m(3, 3);
    m.row(0) = BitVector::from_string("110");
    m.row(1) = BitVector::from_string("011");
    m.row(2) = BitVector::from_string("101");
    EXPECT_EQ(gf2_rank(m), 2U);
    EXPECT_EQ(gf2_rank(BitMatrix(4, 7)), 0U);
}

TEST(BitMatrixTest, RankMatchesSpanEnumeration) {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = random_matrix(1 + rng.below(7), 1 + rng.below(9), rng);
        ASSERT_EQ(gf2_rank(m), rank_by_span(m));
    }
}

TEST(BitMatrixTest, NullSpaceVectorsAreKernel) {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = random_matrix(1 + rng.below(10), 1 + rng.below(70), rng);
        const auto kernel = gf2_null_space(m);
        ASSERT_EQ(kernel.size(), m.cols() - gf2_rank(m));
        Gf2Basis basis(m.cols());
        for (const auto& v : kernel) {
            ASSERT_TRUE(m.multiply(v).none());
            ASSERT_TRUE(basis.insert(v));
        }
    }
}

TEST(BitMatrixTest, SolveSubstitutesBack) {
    Rng rng(9);
    int solvable = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto m = random_matrix(1 + rng.below(8), 1 + rng.below(8), rng);
        BitVector b(m.rows());
        for (std::size_t i = 0; i < b.size(); ++i) b.set(i, rng.coin());
        const auto sol = gf2_solve(m, b);
        // Consistent iff rank([M | b]) == rank(M).
        BitMatrix augmented(0, m.cols() + 1);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            BitVector tail(1);
            tail.set(0, b.get(r));
            augmented.append_row(m.row(r).concat(tail));
        }
        ASSERT_EQ(sol.has_value(), gf2_rank(augmented) == gf2_rank(m));
        if (!sol) continue;
        ++solvable;
        ASSERT_EQ(m.multiply(sol->particular), b);
        ASSERT_EQ(sol->null_basis.size(), m.cols() - gf2_rank(m));
        for (const auto& v : sol->null_basis) ASSERT_EQ(m.multiply(sol->particular ^ v), b);
    }
    EXPECT_GT(solvable, 50);
}

TEST(BitMatrixTest, TransposeTwiceIsIdentity) {
    Rng rng(1);
    const auto m = random_matrix(5, 9, rng);
    const auto t = m.transpose();
    ASSERT_EQ(t.rows(), 9U);
    for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t c = 0; c < 9; ++c) EXPECT_EQ(m.get(r, c), t.get(c, r));
    }
}

TEST(Gf2BasisTest, InsertContainsReduce) {
    Gf2Basis basis(4);
    EXPECT_TRUE(basis.insert(BitVector::from_string("1100")));
    EXPECT_TRUE(basis.insert(BitVector::from_string("0110")));
    EXPECT_FALSE(basis.insert(BitVector::from_string("1010")));
    EXPECT_TRUE(basis.contains(BitVector::from_string("1010")));
    EXPECT_FALSE(basis.contains(BitVector::from_string("0001")));
    EXPECT_EQ(basis.rank(), 2U);
}

}  // namespace
}  // namespace adaptstab
