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

#include <algorithm>
#include <bit>
#include <utility>

#include "adaptstab/errors.h"

namespace adaptstab {

namespace {

std::size_t word_count(std::size_t n) { return (n + BitVector::kWordBits - 1) / BitVector::kWordBits; }

void require_same_size(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) {
        throw DimensionError("bit vector length mismatch: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    }
}

}  // namespace

BitVector::BitVector(std::size_t n) : size_(n), words_(word_count(n), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw ParseError(std::string("illegal bit character '") + bits[i] + "'");
        }
    }
    return v;
}

void BitVector::clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

BitVector& BitVector::operator^=(const BitVector& other) {
    require_same_size(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    require_same_size(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
    require_same_size(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

std::size_t BitVector::popcount() const noexcept {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVector::any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

bool BitVector::dot(const BitVector& other) const {
    require_same_size(*this, other);
    Word acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
}

std::size_t BitVector::first_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return size_;
}

BitVector BitVector::concat(const BitVector& tail) const {
    BitVector out(size_ + tail.size_);
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) out.set(i, true);
    }
    for (std::size_t i = 0; i < tail.size_; ++i) {
        if (tail.get(i)) out.set(size_ + i, true);
    }
    return out;
}

BitVector BitVector::slice(std::size_t begin, std::size_t count) const {
    if (begin + count > size_) throw DimensionError("bit vector slice out of range");
    BitVector out(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (get(begin + i)) out.set(i, true);
    }
    return out;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) noexcept {
    std::size_t common = std::min(a.words_.size(), b.words_.size());
    for (std::size_t w = 0; w < common; ++w) {
        BitVector::Word diff = a.words_[w] ^ b.words_[w];
        if (diff != 0) {
            BitVector::Word low = diff & (~diff + 1);
            return (a.words_[w] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return a.size_ <=> b.size_;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix::BitMatrix(std::vector<BitVector> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (r.size() != cols_) throw DimensionError("BitMatrix row has wrong width");
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != cols_) throw DimensionError("appended row has wrong width");
    rows_.push_back(std::move(row));
}

BitVector BitMatrix::multiply(const BitVector& x) const {
    if (x.size() != cols_) throw DimensionError("matrix-vector product: width mismatch");
    BitVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].dot(x)) out.set(r, true);
    }
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (rows_[r].get(c)) t.set(c, r, true);
        }
    }
    return t;
}

Echelon rref(BitMatrix m) {
    Echelon e;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(m.row(pivot), m.row(rank));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != rank && m.get(r, col)) m.row(r) ^= m.row(rank);
        }
        e.pivot_cols.push_back(col);
        ++rank;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t gf2_rank(const BitMatrix& m) { return rref(m).rank(); }

std::vector<BitVector> gf2_null_space(const BitMatrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        BitVector v(m.cols());
        v.set(free, true);
        for (std::size_t i = 0; i < e.rank(); ++i) {
            if (e.reduced.get(i, free)) v.set(e.pivot_cols[i], true);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Gf2Solution> gf2_solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows()) {
        throw DimensionError("gf2_solve: right-hand side has " + std::to_string(b.size()) + " bits for " +
                             std::to_string(m.rows()) + " rows");
    }
    // Eliminate on the augmented matrix [M | b].
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVector bit(1);
        bit.set(0, b.get(r));
        aug.row(r) = m.row(r).concat(bit);
    }
    Echelon e = rref(std::move(aug));
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;

    Gf2Solution sol{BitVector(m.cols()), {}};
    for (std::size_t i = 0; i < e.rank(); ++i) {
        if (e.reduced.get(i, m.cols())) sol.particular.set(e.pivot_cols[i], true);
    }
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        BitVector v(m.cols());
        v.set(free, true);
        for (std::size_t i = 0; i < e.rank(); ++i) {
            if (e.reduced.get(i, free)) v.set(e.pivot_cols[i], true);
        }
        sol.null_basis.push_back(std::move(v));
    }
    return sol;
}

BitVector Gf2Basis::reduce(BitVector v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (v.get(pivots_[i])) v ^= basis_[i];
    }
    return v;
}

bool Gf2Basis::insert(BitVector v) {
    if (v.size() != width_) throw DimensionError("Gf2Basis: width mismatch");
    v = reduce(std::move(v));
    std::size_t pivot = v.first_set();
    if (pivot == v.size()) return false;
    pivots_.push_back(pivot);
    basis_.push_back(std::move(v));
    return true;
}

bool Gf2Basis::contains(BitVector v) const {
    if (v.size() != width_) throw DimensionError("Gf2Basis: width mismatch");
    return reduce(std::move(v)).none();
}

}  // namespace adaptstab
