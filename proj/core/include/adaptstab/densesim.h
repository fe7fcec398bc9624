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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "adaptstab/gates.h"
#include "adaptstab/pauli.h"
#include "adaptstab/tableau.h"

namespace adaptstab {

using Complex = std::complex<double>;

/// Largest register the dense simulator accepts: 16, or the value of the
/// ADAPTSTAB_MAX_QUBITS environment variable when set.
std::size_t max_dense_qubits();

/// Exact n-qubit amplitudes. Qubit 0 is the most significant bit of the basis
/// index, so basis index bits read left to right like a Pauli string.
class StateVector {
   public:
    StateVector() = default;
    /// Takes ownership of the amplitudes; throws ValidationError unless the
    /// norm is 1 within 1e-10.
    StateVector(std::size_t n, Eigen::VectorXcd amplitudes);

    std::size_t num_qubits() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
    const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
    Complex amplitude(std::uint64_t index) const { return amplitudes_[static_cast<Eigen::Index>(index)]; }

    /// Bit mask of qubit q inside a basis index.
    std::uint64_t qubit_mask(std::size_t q) const noexcept { return std::uint64_t{1} << (n_ - 1 - q); }

   private:
    std::size_t n_ = 0;
    Eigen::VectorXcd amplitudes_;
};

StateVector ghz_state(std::size_t n);
StateVector w_state(std::size_t n);
StateVector dicke_state(std::size_t n, std::size_t k);
/// The multi-controlled phase used here flips the sign of |0...0>, not |1...1>,
/// applied to |+>^n.
StateVector hypergraph_state(std::size_t n);
StateVector plus_state(std::size_t n);
/// Bit string like "0110".
StateVector basis_state(std::string_view bits);
StateVector state_from_tableau(const StabilizerTableau& t);
/// Normalizes the input; throws ValidationError on a zero vector or a length
/// that is not a power of two.
StateVector state_from_amplitudes(const std::vector<Complex>& amplitudes);

/// Parses "ghz:N", "w:N", "dicke:N,K", "hypergraph:N", "plus:N", "basis:BITS".
StateVector make_state(std::string_view family);

/// Operator O_A acting on an ordered qubit list; row index bits follow the
/// list order with the first qubit most significant.
struct SupportedOperator {
    std::vector<std::size_t> support;
    Eigen::MatrixXcd matrix;

    /// The non-identity part of p, sign included.
    static SupportedOperator pauli(const PauliOperator& p);
    /// letters[i] acts on support[i].
    static SupportedOperator pauli_on(std::vector<std::size_t> support, std::string_view letters);

    double norm() const;
    bool is_hermitian(double tol = 1e-10) const;
};

Eigen::Matrix2cd pauli_matrix(PauliLetter letter);
/// Full 2^n x 2^n matrix, for small-n cross-checks.
Eigen::MatrixXcd dense_matrix(const PauliOperator& p);

StateVector apply_pauli(const StateVector& s, const PauliOperator& p);
StateVector apply_gate(const StateVector& s, const GateApplication& gate);
StateVector apply_single_qubit(const StateVector& s, std::size_t q, const Eigen::Matrix2cd& u);

/// Reduced density matrix on `subset`, ordered like SupportedOperator.
Eigen::MatrixXcd reduced_density_matrix(const StateVector& s, const std::vector<std::size_t>& subset);

double expectation(const StateVector& s, const SupportedOperator& o);
/// <O1 O2> - <O1><O2> for disjoint supports; throws ValidationError on overlap.
double correlation(const StateVector& s, const SupportedOperator& o1, const SupportedOperator& o2);
Complex overlap(const StateVector& a, const StateVector& b);
double fidelity(const StateVector& a, const StateVector& b);

/// |<Z^{2w}> - <Z^w>^2| for the Dicke state D_k written with binomial sums,
/// where Z^w is a product of w Z operators. Requires 2w <= n and k <= n.
double dicke_correlation_formula(std::size_t n, std::size_t k, std::size_t w);

double binomial(std::size_t n, std::size_t k);

}  // namespace adaptstab
