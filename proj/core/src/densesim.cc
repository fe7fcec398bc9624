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

#include "adaptstab/densesim.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "adaptstab/errors.h"

namespace adaptstab {
namespace {

constexpr std::size_t kDefaultMaxQubits = 16;
constexpr double kNormTolerance = 1e-10;

void guard_size(std::size_t n) {
    if (n == 0) throw ValidationError("a state needs at least one qubit");
    const std::size_t cap = max_dense_qubits();
    if (n > cap) {
        throw ResourceGuardError("dense simulation of " + std::to_string(n) + " qubits exceeds the cap of " +
                                 std::to_string(cap) + " (set ADAPTSTAB_MAX_QUBITS to raise it)");
    }
}

Eigen::Index dim_of(std::size_t n) { return static_cast<Eigen::Index>(std::uint64_t{1} << n); }

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

std::uint64_t mask_of(const BitVector& bits) {
    const std::size_t n = bits.size();
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (bits.get(q)) m |= std::uint64_t{1} << (n - 1 - q);
    }
    return m;
}

Complex i_power(unsigned k) {
    static const Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPowers[k & 3U];
}

void check_support(const StateVector& s, const SupportedOperator& o) {
    const auto& sup = o.support;
    for (std::size_t i = 0; i < sup.size(); ++i) {
        if (sup[i] >= s.num_qubits()) throw DimensionError("operator support exceeds the register");
        if (std::find(sup.begin() + static_cast<std::ptrdiff_t>(i) + 1, sup.end(), sup[i]) != sup.end()) {
            throw ValidationError("operator support repeats qubit " + std::to_string(sup[i]));
        }
    }
    if (o.matrix.rows() != dim_of(sup.size()) || o.matrix.cols() != dim_of(sup.size())) {
        throw DimensionError("operator matrix does not match its support size");
    }
}

// Applies u to qubit q on the basis states where every `control` bit is set.
StateVector apply_controlled(const StateVector& s, std::uint64_t control, std::size_t q, const Eigen::Matrix2cd& u) {
    const std::uint64_t bit = s.qubit_mask(q);
    Eigen::VectorXcd out = s.amplitudes();
    const auto& in = s.amplitudes();
    for (std::uint64_t i = 0; i < s.dimension(); ++i) {
        if ((i & bit) != 0 || (i & control) != control) continue;
        const auto i0 = static_cast<Eigen::Index>(i);
        const auto i1 = static_cast<Eigen::Index>(i | bit);
        out[i0] = u(0, 0) * in[i0] + u(0, 1) * in[i1];
        out[i1] = u(1, 0) * in[i0] + u(1, 1) * in[i1];
    }
    return StateVector(s.num_qubits(), std::move(out));
}

std::size_t parse_count(std::string_view text, std::string_view family) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw ParseError("bad parameter '" + std::string(text) + "' for family " + std::string(family));
    }
    return value;
}

}  // namespace

std::size_t max_dense_qubits() {
    if (const char* env = std::getenv("ADAPTSTAB_MAX_QUBITS")) {
        std::size_t value = 0;
        std::string_view text(env);
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc() && ptr == text.data() + text.size() && value > 0 && value < 40) return value;
    }
    return kDefaultMaxQubits;
}

StateVector::StateVector(std::size_t n, Eigen::VectorXcd amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
    if (n >= 64 || amplitudes_.size() != dim_of(n)) throw DimensionError("amplitude count is not 2^n");
    if (std::abs(amplitudes_.squaredNorm() - 1.0) > kNormTolerance) throw ValidationError("state is not normalized");
}

StateVector ghz_state(std::size_t n) {
    guard_size(n);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim_of(n));
    v[0] = v[dim_of(n) - 1] = 1.0 / std::sqrt(2.0);
    return StateVector(n, std::move(v));
}

StateVector dicke_state(std::size_t n, std::size_t k) {
    guard_size(n);
    if (k > n) throw ValidationError("Dicke excitation count exceeds n");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim_of(n));
    const double amp = 1.0 / std::sqrt(binomial(n, k));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(i))) == k) v[i] = amp;
    }
    return StateVector(n, std::move(v));
}

StateVector w_state(std::size_t n) { return dicke_state(n, 1); }

StateVector plus_state(std::size_t n) {
    guard_size(n);
    Eigen::VectorXcd v = Eigen::VectorXcd::Constant(dim_of(n), 1.0 / std::sqrt(static_cast<double>(dim_of(n))));
    return StateVector(n, std::move(v));
}

StateVector hypergraph_state(std::size_t n) {
    guard_size(n);
    Eigen::VectorXcd v = Eigen::VectorXcd::Constant(dim_of(n), 1.0 / std::sqrt(static_cast<double>(dim_of(n))));
    v[0] = -v[0];
    return StateVector(n, std::move(v));
}

StateVector basis_state(std::string_view bits) {
    guard_size(bits.size());
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw ParseError("basis label must be a 0/1 string");
        index = (index << 1U) | static_cast<std::uint64_t>(c == '1');
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim_of(bits.size()));
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return StateVector(bits.size(), std::move(v));
}

StateVector state_from_tableau(const StabilizerTableau& t) {
    const std::size_t n = t.num_qubits();
    guard_size(n);
    // Any basis state in the support has nonzero overlap with the target, so
    // projecting it onto the stabilizer code space recovers the state.
    StabilizerTableau probe = t;
    Rng rng(0);
    std::string bits(n, '0');
    for (std::size_t q = 0; q < n; ++q) {
        if (probe.measure(PauliOperator::single(n, q, PauliLetter::Z), std::nullopt, rng).value < 0) bits[q] = '1';
    }
    Eigen::VectorXcd v = basis_state(bits).amplitudes();
    for (const auto& g : t.generators()) {
        StateVector current(n, v.normalized());
        v = 0.5 * (current.amplitudes() + apply_pauli(current, g).amplitudes());
    }
    return StateVector(n, v.normalized());
}

StateVector state_from_amplitudes(const std::vector<Complex>& amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || (dim & (dim - 1)) != 0) throw DimensionError("amplitude count must be a power of two");
    const auto n = static_cast<std::size_t>(std::countr_zero(dim));
    guard_size(n);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) v[static_cast<Eigen::Index>(i)] = amplitudes[i];
    const double norm = v.norm();
    if (norm < 1e-300) throw ValidationError("zero amplitude vector");
    return StateVector(n, v / norm);
}

StateVector make_state(std::string_view family) {
    const auto colon = family.find(':');
    if (colon == std::string_view::npos) throw ParseError("state family needs NAME:PARAMS, got '" + std::string(family) + "'");
    const auto name = family.substr(0, colon);
    const auto params = family.substr(colon + 1);
    if (name == "ghz") return ghz_state(parse_count(params, name));
    if (name == "w") return w_state(parse_count(params, name));
    if (name == "hypergraph") return hypergraph_state(parse_count(params, name));
    if (name == "plus") return plus_state(parse_count(params, name));
    if (name == "basis") return basis_state(params);
    if (name == "dicke") {
        const auto comma = params.find(',');
        if (comma == std::string_view::npos) throw ParseError("dicke family needs N,K");
        return dicke_state(parse_count(params.substr(0, comma), name), parse_count(params.substr(comma + 1), name));
    }
    throw ParseError("unknown state family '" + std::string(name) + "'");
}

Eigen::Matrix2cd pauli_matrix(PauliLetter letter) {
    Eigen::Matrix2cd m;
    switch (letter) {
        case PauliLetter::I:
            m << 1, 0, 0, 1;
            break;
        case PauliLetter::X:
            m << 0, 1, 1, 0;
            break;
        case PauliLetter::Y:
            m << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        case PauliLetter::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

SupportedOperator SupportedOperator::pauli(const PauliOperator& p) {
    SupportedOperator o;
    o.support = p.support();
    o.matrix = Eigen::MatrixXcd::Identity(1, 1) * i_power(p.sign_exponent());
    for (auto q : o.support) o.matrix = kron(o.matrix, pauli_matrix(p.letter(q)));
    return o;
}

SupportedOperator SupportedOperator::pauli_on(std::vector<std::size_t> support, std::string_view letters) {
    if (support.size() != letters.size()) throw DimensionError("letter count does not match the support");
    SupportedOperator o;
    o.support = std::move(support);
    o.matrix = Eigen::MatrixXcd::Identity(1, 1);
    for (char c : letters) o.matrix = kron(o.matrix, pauli_matrix(pauli_letter_from_char(c)));
    return o;
}

double SupportedOperator::norm() const {
    if (matrix.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix);
    return svd.singularValues()(0);
}

bool SupportedOperator::is_hermitian(double tol) const { return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() <= tol; }

Eigen::MatrixXcd dense_matrix(const PauliOperator& p) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1) * i_power(p.sign_exponent());
    for (std::size_t q = 0; q < p.num_qubits(); ++q) m = kron(m, pauli_matrix(p.letter(q)));
    return m;
}

StateVector apply_pauli(const StateVector& s, const PauliOperator& p) {
    if (p.num_qubits() != s.num_qubits()) throw DimensionError("Pauli length does not match the state");
    const std::uint64_t xm = mask_of(p.x());
    const std::uint64_t zm = mask_of(p.z());
    const Complex phase = i_power(p.xz_phase());
    Eigen::VectorXcd out(s.amplitudes().size());
    for (std::uint64_t b = 0; b < s.dimension(); ++b) {
        const bool odd = (std::popcount(b & zm) & 1) != 0;
        out[static_cast<Eigen::Index>(b ^ xm)] = (odd ? -phase : phase) * s.amplitude(b);
    }
    return StateVector(s.num_qubits(), std::move(out));
}

StateVector apply_single_qubit(const StateVector& s, std::size_t q, const Eigen::Matrix2cd& u) {
    if (q >= s.num_qubits()) throw DimensionError("qubit out of range");
    return apply_controlled(s, 0, q, u);
}

StateVector apply_gate(const StateVector& s, const GateApplication& gate) {
    check_gate(gate, s.num_qubits());
    const auto& q = gate.qubits;
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd u;
    switch (gate.kind) {
        case GateKind::H:
            u << r, r, r, -r;
            return apply_single_qubit(s, q[0], u);
        case GateKind::S:
            u << 1, 0, 0, Complex(0, 1);
            return apply_single_qubit(s, q[0], u);
        case GateKind::SDG:
            u << 1, 0, 0, Complex(0, -1);
            return apply_single_qubit(s, q[0], u);
        case GateKind::X:
            return apply_single_qubit(s, q[0], pauli_matrix(PauliLetter::X));
        case GateKind::Y:
            return apply_single_qubit(s, q[0], pauli_matrix(PauliLetter::Y));
        case GateKind::Z:
            return apply_single_qubit(s, q[0], pauli_matrix(PauliLetter::Z));
        case GateKind::CNOT: {
            StateVector out = s;
            for (std::size_t i = 1; i < q.size(); ++i) {
                out = apply_controlled(out, s.qubit_mask(q[0]), q[i], pauli_matrix(PauliLetter::X));
            }
            return out;
        }
        case GateKind::CZ:
            return apply_controlled(s, s.qubit_mask(q[0]), q[1], pauli_matrix(PauliLetter::Z));
        case GateKind::CP:
            return apply_controlled(s, s.qubit_mask(q[0]), q[1], pauli_matrix(gate.letter));
        case GateKind::SWAP: {
            const std::uint64_t a = s.qubit_mask(q[0]);
            const std::uint64_t b = s.qubit_mask(q[1]);
            Eigen::VectorXcd out = s.amplitudes();
            for (std::uint64_t i = 0; i < s.dimension(); ++i) {
                if (((i & a) != 0) != ((i & b) != 0)) out[static_cast<Eigen::Index>(i ^ a ^ b)] = s.amplitude(i);
            }
            return StateVector(s.num_qubits(), std::move(out));
        }
    }
    return s;
}

Eigen::MatrixXcd reduced_density_matrix(const StateVector& s, const std::vector<std::size_t>& subset) {
    const std::size_t n = s.num_qubits();
    std::vector<bool> inside(n, false);
    for (auto q : subset) {
        if (q >= n) throw DimensionError("subset qubit out of range");
        if (inside[q]) throw ValidationError("subset repeats qubit " + std::to_string(q));
        inside[q] = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t q = 0; q < n; ++q) {
        if (!inside[q]) rest.push_back(q);
    }
    Eigen::MatrixXcd psi(dim_of(subset.size()), dim_of(rest.size()));
    for (std::uint64_t i = 0; i < s.dimension(); ++i) {
        std::uint64_t local = 0;
        std::uint64_t other = 0;
        for (auto q : subset) local = (local << 1U) | static_cast<std::uint64_t>((i & s.qubit_mask(q)) != 0);
        for (auto q : rest) other = (other << 1U) | static_cast<std::uint64_t>((i & s.qubit_mask(q)) != 0);
        psi(static_cast<Eigen::Index>(local), static_cast<Eigen::Index>(other)) = s.amplitude(i);
    }
    return psi * psi.adjoint();
}

double expectation(const StateVector& s, const SupportedOperator& o) {
    check_support(s, o);
    if (o.support.empty()) return o.matrix(0, 0).real();
    return (reduced_density_matrix(s, o.support) * o.matrix).trace().real();
}

double correlation(const StateVector& s, const SupportedOperator& o1, const SupportedOperator& o2) {
    check_support(s, o1);
    check_support(s, o2);
    for (auto q : o1.support) {
        if (std::find(o2.support.begin(), o2.support.end(), q) != o2.support.end()) {
            throw ValidationError("correlation needs disjoint supports; both contain qubit " + std::to_string(q));
        }
    }
    SupportedOperator joint;
    joint.support = o1.support;
    joint.support.insert(joint.support.end(), o2.support.begin(), o2.support.end());
    joint.matrix = kron(o1.matrix, o2.matrix);
    return expectation(s, joint) - expectation(s, o1) * expectation(s, o2);
}

Complex overlap(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) throw DimensionError("states have different qubit counts");
    return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const StateVector& a, const StateVector& b) { return std::min(1.0, std::norm(overlap(a, b))); }

double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    k = std::min(k, n - k);
    double out = 1.0;
    for (std::size_t i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
    return std::round(out);
}

double dicke_correlation_formula(std::size_t n, std::size_t k, std::size_t w) {
    if (2 * w > n) throw ValidationError("Dicke correlation needs 2w <= n");
    if (k > n) throw ValidationError("Dicke correlation needs k <= n");
    // <Z^{m}> on D_k: signed count of excitations inside an m-qubit block.
    auto z_product = [n, k](std::size_t m) {
        double sum = 0.0;
        for (std::size_t k1 = 0; k1 <= std::min(k, m); ++k1) {
            const double term = binomial(m, k1) * binomial(n - m, k - k1);
            sum += (k1 % 2 == 0) ? term : -term;
        }
        return sum / binomial(n, k);
    };
    const double single = z_product(w);
    return std::abs(z_product(2 * w) - single * single);
}

}  // namespace adaptstab
