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

#include "adaptstab/code.h"

#include <algorithm>
#include <charconv>
#include <string>
#include <utility>

#include "adaptstab/errors.h"

namespace adaptstab {

StabilizerCode::StabilizerCode(std::string name, std::vector<PauliOperator> checks)
    : name_(std::move(name)), checks_(std::move(checks)) {
    if (checks_.empty()) throw ValidationError("a code needs at least one check");
    n_ = checks_.front().num_qubits();
    Gf2Basis basis(2 * n_);
    for (std::size_t i = 0; i < checks_.size(); ++i) {
        const auto& c = checks_[i];
        if (c.num_qubits() != n_) throw DimensionError("check " + std::to_string(i) + " has a different length");
        if (!c.hermitian()) throw ValidationError("check " + std::to_string(i) + " is not Hermitian");
        for (std::size_t j = 0; j < i; ++j) {
            if (!commutes(c, checks_[j])) {
                throw ValidationError("checks " + std::to_string(j) + " (" + checks_[j].to_string() + ") and " +
                                      std::to_string(i) + " (" + c.to_string() + ") anticommute");
            }
        }
        if (!basis.insert(c.symplectic_row())) {
            throw ValidationError("check " + std::to_string(i) + " (" + c.to_string() +
                                  ") depends on the earlier checks");
        }
    }
}

std::size_t StabilizerCode::max_check_weight() const {
    std::size_t out = 0;
    for (const auto& c : checks_) out = std::max(out, c.weight());
    return out;
}

std::size_t StabilizerCode::max_participation() const {
    std::vector<std::size_t> count(n_, 0);
    for (const auto& c : checks_) {
        for (auto q : c.support()) ++count[q];
    }
    return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

std::size_t StabilizerCode::sparsity() const { return std::max(max_check_weight(), max_participation()); }

StabilizerCode build_code(const std::vector<std::string>& checks, std::string name) {
    std::vector<PauliOperator> ops;
    ops.reserve(checks.size());
    for (const auto& text : checks) ops.push_back(parse_pauli(text));
    return StabilizerCode(std::move(name), std::move(ops));
}

StabilizerCode repetition_code(std::size_t n) {
    if (n < 2) throw ValidationError("repetition code needs n >= 2");
    std::vector<PauliOperator> checks;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        PauliOperator p(n);
        p.set_letter(i, PauliLetter::Z);
        p.set_letter(i + 1, PauliLetter::Z);
        checks.push_back(std::move(p));
    }
    return StabilizerCode("repetition(" + std::to_string(n) + ")", std::move(checks));
}

StabilizerCode steane_code() {
    const char* rows[] = {"1010101", "0110011", "0001111"};
    std::vector<PauliOperator> checks;
    for (PauliLetter letter : {PauliLetter::X, PauliLetter::Z}) {
        for (const char* row : rows) {
            PauliOperator p(7);
            for (std::size_t q = 0; q < 7; ++q) {
                if (row[q] == '1') p.set_letter(q, letter);
            }
            checks.push_back(std::move(p));
        }
    }
    return StabilizerCode("steane", std::move(checks));
}

StabilizerCode toric_code(std::size_t l) {
    if (l < 2) throw ValidationError("toric code needs L >= 2");
    const std::size_t n = 2 * l * l;
    auto horizontal = [l](std::size_t i, std::size_t j) { return (i % l) * l + (j % l); };
    auto vertical = [l](std::size_t i, std::size_t j) { return l * l + (i % l) * l + (j % l); };
    std::vector<PauliOperator> checks;
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            if (i + 1 == l && j + 1 == l) continue;
            PauliOperator star(n);
            for (auto q : {horizontal(i, j), horizontal(i, j + l - 1), vertical(i, j), vertical(i + l - 1, j)}) {
                star.set_letter(q, PauliLetter::X);
            }
            checks.push_back(std::move(star));
        }
    }
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            if (i + 1 == l && j + 1 == l) continue;
            PauliOperator plaquette(n);
            for (auto q : {horizontal(i, j), horizontal(i + 1, j), vertical(i, j), vertical(i, j + 1)}) {
                plaquette.set_letter(q, PauliLetter::Z);
            }
            checks.push_back(std::move(plaquette));
        }
    }
    return StabilizerCode("toric(" + std::to_string(l) + ")", std::move(checks));
}

StabilizerCode builtin_code(std::string_view name) {
    auto parameter = [&](std::string_view prefix) -> std::size_t {
        std::string_view rest = name.substr(prefix.size());
        if (!rest.empty() && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
        if (!rest.empty() && rest.front() == ':') rest.remove_prefix(1);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
        if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size()) {
            throw ParseError("bad size in builtin code '" + std::string(name) + "'");
        }
        return value;
    };
    if (name == "steane") return steane_code();
    if (name.starts_with("repetition")) return repetition_code(parameter("repetition"));
    if (name.starts_with("toric")) return toric_code(parameter("toric"));
    throw ValidationError("unknown builtin code '" + std::string(name) + "'");
}

StabilizerCode parse_code_text(std::string_view text, std::string name) {
    std::vector<std::string> checks;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto end = text.find('\n');
        std::string_view line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        try {
            parse_pauli(line);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
        checks.emplace_back(line);
    }
    if (checks.empty()) throw ParseError("code file lists no checks");
    return build_code(checks, std::move(name));
}

std::size_t TannerGraph::max_degree() const {
    std::vector<std::size_t> qdeg(num_qubits, 0);
    std::vector<std::size_t> cdeg(num_checks, 0);
    for (const auto& e : edges) {
        ++qdeg[e.qubit];
        ++cdeg[e.check];
    }
    std::size_t out = 0;
    for (auto d : qdeg) out = std::max(out, d);
    for (auto d : cdeg) out = std::max(out, d);
    return out;
}

TannerGraph tanner_graph(const std::vector<PauliOperator>& checks) {
    TannerGraph g;
    g.num_checks = checks.size();
    g.num_qubits = checks.empty() ? 0 : checks.front().num_qubits();
    for (std::size_t q = 0; q < g.num_qubits; ++q) {
        for (std::size_t c = 0; c < checks.size(); ++c) {
            const auto letter = checks[c].letter(q);
            if (letter != PauliLetter::I) g.edges.push_back({q, c, letter});
        }
    }
    return g;
}

}  // namespace adaptstab
