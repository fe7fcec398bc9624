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

#include "adaptstab/pauli.h"

#include <utility>

#include "adaptstab/errors.h"

namespace adaptstab {

namespace {

void require_same_n(const PauliOperator& p, const PauliOperator& q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError("Pauli length mismatch: " + std::to_string(p.num_qubits()) + " vs " +
                             std::to_string(q.num_qubits()));
    }
}

unsigned bit(const BitVector& v, std::size_t i) { return v.get(i) ? 1U : 0U; }

}  // namespace

char to_char(PauliLetter p) {
    switch (p) {
        case PauliLetter::I:
            return 'I';
        case PauliLetter::X:
            return 'X';
        case PauliLetter::Y:
            return 'Y';
        case PauliLetter::Z:
            return 'Z';
    }
    return '?';
}

PauliLetter pauli_letter_from_char(char c) {
    switch (c) {
        case 'I':
            return PauliLetter::I;
        case 'X':
            return PauliLetter::X;
        case 'Y':
            return PauliLetter::Y;
        case 'Z':
            return PauliLetter::Z;
        default:
            throw ParseError(std::string("illegal Pauli character '") + c + "'");
    }
}

PauliOperator::PauliOperator(std::size_t n) : x_(n), z_(n) {}

PauliOperator::PauliOperator(BitVector x, BitVector z, std::uint8_t xz_phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(static_cast<std::uint8_t>(xz_phase & 3U)) {
    if (x_.size() != z_.size()) throw DimensionError("Pauli x/z bit vectors differ in length");
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit, PauliLetter letter) {
    if (qubit >= n) throw DimensionError("qubit index out of range");
    PauliOperator p(n);
    p.set_letter(qubit, letter);
    return p;
}

PauliOperator PauliOperator::parse(std::string_view text) {
    std::uint8_t sign = 0;
    if (text.starts_with("+i")) {
        sign = 1;
        text.remove_prefix(2);
    } else if (text.starts_with("-i")) {
        sign = 3;
        text.remove_prefix(2);
    } else if (text.starts_with("+")) {
        text.remove_prefix(1);
    } else if (text.starts_with("-")) {
        sign = 2;
        text.remove_prefix(1);
    }
    if (text.empty()) throw ParseError("empty Pauli string");
    PauliOperator p(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) p.set_letter(q, pauli_letter_from_char(text[q]));
    p.set_sign_exponent(sign);
    return p;
}

std::uint8_t PauliOperator::sign_exponent() const noexcept {
    std::size_t ny = (x_ & z_).popcount();
    return static_cast<std::uint8_t>((phase_ + 4 - (ny & 3U)) & 3U);
}

void PauliOperator::set_sign_exponent(std::uint8_t e) noexcept {
    std::size_t ny = (x_ & z_).popcount();
    phase_ = static_cast<std::uint8_t>((e + ny) & 3U);
}

void PauliOperator::set_letter(std::size_t q, PauliLetter p) {
    // Keep the Hermitian-letter sign fixed while the Y count changes.
    std::uint8_t sign = sign_exponent();
    auto v = static_cast<unsigned>(p);
    x_.set(q, (v & 1U) != 0);
    z_.set(q, (v & 2U) != 0);
    set_sign_exponent(sign);
}

std::size_t PauliOperator::weight() const noexcept { return (x_ | z_).popcount(); }

std::vector<std::size_t> PauliOperator::support() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        if (x_.get(q) || z_.get(q)) out.push_back(q);
    }
    return out;
}

std::string PauliOperator::to_string() const {
    static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string s = kPrefix[sign_exponent()];
    s.reserve(s.size() + num_qubits());
    for (std::size_t q = 0; q < num_qubits(); ++q) s.push_back(to_char(letter(q)));
    return s;
}

void PauliOperator::apply_h(std::size_t q) {
    unsigned xb = bit(x_, q);
    unsigned zb = bit(z_, q);
    add_phase(2U * (xb & zb));
    x_.set(q, zb != 0);
    z_.set(q, xb != 0);
}

void PauliOperator::apply_s(std::size_t q) {
    unsigned xb = bit(x_, q);
    add_phase(xb);
    if (xb) z_.flip(q);
}

void PauliOperator::apply_sdg(std::size_t q) {
    unsigned xb = bit(x_, q);
    add_phase(3U * xb);
    if (xb) z_.flip(q);
}

void PauliOperator::apply_x(std::size_t q) { add_phase(2U * bit(z_, q)); }

void PauliOperator::apply_y(std::size_t q) { add_phase(2U * (bit(x_, q) ^ bit(z_, q))); }

void PauliOperator::apply_z(std::size_t q) { add_phase(2U * bit(x_, q)); }

void PauliOperator::apply_cnot(std::size_t control, std::size_t target) {
    if (x_.get(control)) x_.flip(target);
    if (z_.get(target)) z_.flip(control);
}

void PauliOperator::apply_cz(std::size_t a, std::size_t b) {
    unsigned xa = bit(x_, a);
    unsigned xb = bit(x_, b);
    add_phase(2U * (xa & xb));
    if (xb) z_.flip(a);
    if (xa) z_.flip(b);
}

void PauliOperator::apply_cy(std::size_t control, std::size_t target) {
    apply_sdg(target);
    apply_cnot(control, target);
    apply_s(target);
}

void PauliOperator::apply_swap(std::size_t a, std::size_t b) {
    bool xa = x_.get(a), za = z_.get(a);
    x_.set(a, x_.get(b));
    z_.set(a, z_.get(b));
    x_.set(b, xa);
    z_.set(b, za);
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
    require_same_n(p, q);
    unsigned extra = 2U * static_cast<unsigned>((p.z() & q.x()).popcount() & 1U);
    return PauliOperator(p.x() ^ q.x(), p.z() ^ q.z(),
                         static_cast<std::uint8_t>((p.xz_phase() + q.xz_phase() + extra) & 3U));
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
    require_same_n(p, q);
    return p.x().dot(q.z()) == p.z().dot(q.x());
}

PauliOperator parse_pauli(std::string_view text) { return PauliOperator::parse(text); }

std::string format_pauli(const PauliOperator& p) { return p.to_string(); }

bool weight_lex_less(const PauliOperator& a, const PauliOperator& b) {
    std::size_t wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    if (auto c = a.x() <=> b.x(); c != 0) return c < 0;
    return (a.z() <=> b.z()) < 0;
}

BitMatrix symplectic_matrix(const std::vector<PauliOperator>& ops) {
    std::size_t n = ops.empty() ? 0 : ops.front().num_qubits();
    BitMatrix m(0, 2 * n);
    for (const auto& p : ops) {
        if (p.num_qubits() != n) throw DimensionError("symplectic_matrix: mixed qubit counts");
        m.append_row(p.symplectic_row());
    }
    return m;
}

}  // namespace adaptstab
