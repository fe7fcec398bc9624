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
#include <string>
#include <string_view>
#include <vector>

#include "adaptstab/pauli.h"

namespace adaptstab {

/// Independent, mutually commuting checks on n qubits.
class StabilizerCode {
   public:
    StabilizerCode() = default;
    /// Throws ValidationError naming the offending pair on anticommutation or
    /// dependence, DimensionError on mixed lengths.
    StabilizerCode(std::string name, std::vector<PauliOperator> checks);

    const std::string& name() const noexcept { return name_; }
    std::size_t num_qubits() const noexcept { return n_; }
    std::size_t num_logical() const noexcept { return n_ - checks_.size(); }
    const std::vector<PauliOperator>& checks() const noexcept { return checks_; }

    std::size_t max_check_weight() const;
    /// Largest number of checks acting on one qubit.
    std::size_t max_participation() const;
    /// max(max_check_weight, max_participation).
    std::size_t sparsity() const;

   private:
    std::string name_;
    std::size_t n_ = 0;
    std::vector<PauliOperator> checks_;
};

StabilizerCode build_code(const std::vector<std::string>& checks, std::string name = "custom");

/// "repetition(N)" / "repetitionN", "steane", "toric(L)" / "toricL".
StabilizerCode builtin_code(std::string_view name);
StabilizerCode repetition_code(std::size_t n);
StabilizerCode steane_code();
/// Stars and plaquettes on an L x L torus, one of each dropped.
StabilizerCode toric_code(std::size_t l);

/// One Pauli string per line; '#' starts a comment.
StabilizerCode parse_code_text(std::string_view text, std::string name = "custom");

struct TannerEdge {
    std::size_t qubit = 0;
    std::size_t check = 0;
    PauliLetter letter = PauliLetter::I;
};

/// Qubit/check incidence; edges sorted by (qubit, check).
struct TannerGraph {
    std::size_t num_qubits = 0;
    std::size_t num_checks = 0;
    std::vector<TannerEdge> edges;

    std::size_t max_degree() const;
};

TannerGraph tanner_graph(const std::vector<PauliOperator>& checks);

}  // namespace adaptstab
