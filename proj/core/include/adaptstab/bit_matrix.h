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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace adaptstab {

/// Fixed-length bit string packed into 64-bit words. Bit i lives in word
/// i / 64 at position i % 64; padding bits past size() are always zero.
class BitVector {
   public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t n);

    /// Parses a string of '0'/'1' characters; character i becomes bit i.
    static BitVector from_string(std::string_view bits);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value) noexcept {
        Word mask = Word{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
    void clear() noexcept;

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

    BitVector& operator^=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    BitVector& operator|=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

    std::size_t popcount() const noexcept;
    bool any() const noexcept;
    bool none() const noexcept { return !any(); }
    /// Parity of the bitwise AND; the GF(2) inner product.
    bool dot(const BitVector& other) const;
    /// Index of the lowest set bit, or size() when none is set.
    std::size_t first_set() const noexcept;

    /// Concatenation [this | tail].
    BitVector concat(const BitVector& tail) const;
    /// Bits [begin, begin + count).
    BitVector slice(std::size_t begin, std::size_t count) const;

    std::string to_string() const;

    friend bool operator==(const BitVector& a, const BitVector& b) noexcept {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }
    /// Lexicographic in bit index order with 0 < 1, i.e. string order of to_string().
    friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) noexcept;

   private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

/// Dense GF(2) matrix stored as packed rows.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    explicit BitMatrix(std::vector<BitVector> rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector& row(std::size_t r) { return rows_[r]; }
    const std::vector<BitVector>& row_vectors() const noexcept { return rows_; }

    void append_row(BitVector row);

    /// M * x over GF(2).
    BitVector multiply(const BitVector& x) const;
    BitMatrix transpose() const;

   private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Reduced row echelon form with the pivot column of each leading row.
struct Echelon {
    BitMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

Echelon rref(BitMatrix m);

std::size_t gf2_rank(const BitMatrix& m);

/// Basis of { x : M x = 0 }.
std::vector<BitVector> gf2_null_space(const BitMatrix& m);

struct Gf2Solution {
    BitVector particular;
    std::vector<BitVector> null_basis;
};

/// One solution of M x = b plus a null-space basis, or nullopt when the
/// system is inconsistent. Throws DimensionError when b.size() != M.rows().
std::optional<Gf2Solution> gf2_solve(const BitMatrix& m, const BitVector& b);

/// Incremental GF(2) span tracker: reports whether a vector is independent of
/// everything inserted so far.
class Gf2Basis {
   public:
    explicit Gf2Basis(std::size_t width) : width_(width) {}

    /// Inserts v if independent; returns true when the rank grew.
    bool insert(BitVector v);
    bool contains(BitVector v) const;
    std::size_t rank() const noexcept { return basis_.size(); }

   private:
    BitVector reduce(BitVector v) const;

    std::size_t width_;
    std::vector<BitVector> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace adaptstab
