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
#include <string_view>
#include <vector>

#include "adaptstab/bit_matrix.h"

namespace adaptstab {

/// Single-site Pauli letter. Values match the (x, z) bit encoding x + 2z.
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char to_char(PauliLetter p);
PauliLetter pauli_letter_from_char(char c);

/// Signed n-qubit Pauli operator i^k * prod_j X_j^{x_j} Z_j^{z_j}.
///
/// Internally the phase is the exponent k of the X-before-Z product form, so
/// multiplication is a popcount away: (i^a X^x1 Z^z1)(i^b X^x2 Z^z2) picks up
/// (-1)^{|z1 & x2|}. The text form uses Hermitian letters instead (Y = iXZ), so
/// "+Y" is stored as k = 1.
class PauliOperator {
   public:
    PauliOperator() = default;
    /// Identity on n qubits.
    explicit PauliOperator(std::size_t n);
    PauliOperator(BitVector x, BitVector z, std::uint8_t xz_phase = 0);

    static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
    static PauliOperator single(std::size_t n, std::size_t qubit, PauliLetter letter);
    /// Text with optional sign prefix "+", "-", "+i", "-i" followed by I/X/Y/Z.
    static PauliOperator parse(std::string_view text);

    std::size_t num_qubits() const noexcept { return x_.size(); }
    const BitVector& x() const noexcept { return x_; }
    const BitVector& z() const noexcept { return z_; }

    /// Exponent k of i in the X-before-Z form, in [0, 4).
    std::uint8_t xz_phase() const noexcept { return phase_; }
    /// Exponent of i in front of the Hermitian-letter form (what to_string prints).
    std::uint8_t sign_exponent() const noexcept;
    /// Sets the Hermitian-letter sign to i^e.
    void set_sign_exponent(std::uint8_t e) noexcept;
    void negate() noexcept { phase_ = static_cast<std::uint8_t>((phase_ + 2) & 3); }

    bool hermitian() const noexcept { return (sign_exponent() & 1U) == 0; }
    /// +1 or -1 for Hermitian operators; the real part of the sign otherwise.
    int sign() const noexcept { return sign_exponent() == 2 ? -1 : 1; }

    PauliLetter letter(std::size_t q) const noexcept {
        return static_cast<PauliLetter>(static_cast<unsigned>(x_.get(q)) | (static_cast<unsigned>(z_.get(q)) << 1U));
    }
    void set_letter(std::size_t q, PauliLetter p);

    std::size_t weight() const noexcept;
    std::vector<std::size_t> support() const;
    bool is_identity_up_to_phase() const noexcept { return x_.none() && z_.none(); }

    /// (x | z), the row used in symplectic linear algebra.
    BitVector symplectic_row() const { return x_.concat(z_); }
    /// (z | x): a row whose GF(2) dot with (x' | z') is the symplectic product.
    BitVector swapped_symplectic_row() const { return z_.concat(x_); }

    std::string to_string() const;

    // In-place conjugation P <- U P U^dagger by a Clifford gate.
    void apply_h(std::size_t q);
    void apply_s(std::size_t q);
    void apply_sdg(std::size_t q);
    void apply_x(std::size_t q);
    void apply_y(std::size_t q);
    void apply_z(std::size_t q);
    void apply_cnot(std::size_t control, std::size_t target);
    void apply_cz(std::size_t a, std::size_t b);
    void apply_cy(std::size_t control, std::size_t target);
    void apply_swap(std::size_t a, std::size_t b);

    friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

   private:
    void add_phase(unsigned k) noexcept { phase_ = static_cast<std::uint8_t>((phase_ + k) & 3U); }

    BitVector x_;
    BitVector z_;
    std::uint8_t phase_ = 0;
};

/// Exact product P * Q. Throws DimensionError on length mismatch.
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);
inline PauliOperator operator*(const PauliOperator& p, const PauliOperator& q) { return multiply(p, q); }

/// Symplectic product test. Throws DimensionError on length mismatch.
bool commutes(const PauliOperator& p, const PauliOperator& q);

inline std::size_t weight(const PauliOperator& p) { return p.weight(); }

PauliOperator parse_pauli(std::string_view text);
std::string format_pauli(const PauliOperator& p);

/// Deterministic order on (weight, x bits, z bits); signs are ignored.
bool weight_lex_less(const PauliOperator& a, const PauliOperator& b);

/// Rows (x | z) of the given operators.
BitMatrix symplectic_matrix(const std::vector<PauliOperator>& ops);

}  // namespace adaptstab
