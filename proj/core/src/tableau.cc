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

#include "adaptstab/tableau.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "adaptstab/errors.h"

namespace adaptstab {
namespace {

constexpr std::size_t kMaxEnumeratedSupport = 20;

void make_hermitian_plus(PauliOperator& p) { p.set_sign_exponent(0); }

void check_width(const std::vector<PauliOperator>& ops, std::size_t n, const char* what) {
    for (const auto& p : ops) {
        if (p.num_qubits() != n) {
            throw DimensionError(std::string(what) + " of length " + std::to_string(p.num_qubits()) +
                                 " in a list of " + std::to_string(n));
        }
    }
}

// Sign s with s * P equal to the product of `ops` selected by `mask`, given the
// selection reproduces P's bits. Both sides are Hermitian so s is +-1.
int relative_sign(const PauliOperator& product, const PauliOperator& p) {
    const unsigned diff = (product.xz_phase() + 4U - p.xz_phase()) & 3U;
    return diff == 0 ? 1 : -1;
}

// Combinations c of the generators whose product is the identity on every
// qubit outside `subset`.
std::vector<BitVector> supported_combinations(const StabilizerTableau& t, const std::vector<std::size_t>& subset) {
    const std::size_t n = t.num_qubits();
    std::vector<bool> inside(n, false);
    for (auto q : subset) {
        if (q >= n) throw DimensionError("subset qubit " + std::to_string(q) + " out of range");
        inside[q] = true;
    }
    const auto& gens = t.generators();
    BitMatrix constraints(0, n);
    for (std::size_t q = 0; q < n; ++q) {
        if (inside[q]) continue;
        BitVector xs(n);
        BitVector zs(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs.set(i, gens[i].x().get(q));
            zs.set(i, gens[i].z().get(q));
        }
        constraints.append_row(std::move(xs));
        constraints.append_row(std::move(zs));
    }
    if (constraints.rows() == 0) {
        std::vector<BitVector> all;
        for (std::size_t i = 0; i < n; ++i) {
            BitVector e(n);
            e.set(i, true);
            all.push_back(std::move(e));
        }
        return all;
    }
    return gf2_null_space(constraints);
}

}  // namespace

StabilizerTableau StabilizerTableau::zero_state(std::size_t n) {
    StabilizerTableau t;
    t.generators_.reserve(n);
    t.destabilizers_.reserve(n);
    for (std::size_t q = 0; q < n; ++q) {
        t.generators_.push_back(PauliOperator::single(n, q, PauliLetter::Z));
        t.destabilizers_.push_back(PauliOperator::single(n, q, PauliLetter::X));
    }
    return t;
}

StabilizerTableau StabilizerTableau::from_generators(std::vector<PauliOperator> generators) {
    const std::size_t n = generators.size();
    check_width(generators, n, "generator");
    StabilizerTableau t;
    t.destabilizers_ = compute_destabilizers(generators);
    t.generators_ = std::move(generators);
    if (auto bad = t.invariant_violation()) throw ValidationError(*bad);
    return t;
}

StabilizerTableau StabilizerTableau::from_rows(std::vector<PauliOperator> generators,
                                               std::vector<PauliOperator> destabilizers) {
    const std::size_t n = generators.size();
    if (destabilizers.size() != n) throw DimensionError("generator and destabilizer counts differ");
    check_width(generators, n, "generator");
    check_width(destabilizers, n, "destabilizer");
    StabilizerTableau t;
    t.generators_ = std::move(generators);
    t.destabilizers_ = std::move(destabilizers);
    if (auto bad = t.invariant_violation()) throw ValidationError(*bad);
    return t;
}

std::vector<PauliOperator> compute_destabilizers(const std::vector<PauliOperator>& generators) {
    const std::size_t n = generators.size();
    check_width(generators, n, "generator");
    for (std::size_t i = 0; i < n; ++i) {
        if (!generators[i].hermitian()) throw ValidationError("generator " + std::to_string(i) + " is not Hermitian");
        for (std::size_t j = 0; j < i; ++j) {
            if (!commutes(generators[i], generators[j])) {
                throw ValidationError("generators " + std::to_string(j) + " and " + std::to_string(i) +
                                      " anticommute");
            }
        }
    }
    BitMatrix system(0, 2 * n);
    for (const auto& g : generators) system.append_row(g.swapped_symplectic_row());
    if (gf2_rank(system) != n) throw ValidationError("generators are not independent");

    std::vector<PauliOperator> destab;
    destab.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        BitVector target(n);
        target.set(i, true);
        auto sol = gf2_solve(system, target);
        if (!sol) throw ValidationError("generators are not independent");
        PauliOperator d(sol->particular.slice(0, n), sol->particular.slice(n, n));
        // Symplectic Gram-Schmidt against earlier destabilizers; multiplying
        // by g_j fixes the pair (i, j) without disturbing any other pairing.
        for (std::size_t j = 0; j < i; ++j) {
            if (!commutes(d, destab[j])) d = d * generators[j];
        }
        make_hermitian_plus(d);
        destab.push_back(std::move(d));
    }
    return destab;
}

std::optional<std::string> StabilizerTableau::invariant_violation() const {
    const std::size_t n = generators_.size();
    if (destabilizers_.size() != n) return "generator and destabilizer counts differ";
    for (std::size_t i = 0; i < n; ++i) {
        if (generators_[i].num_qubits() != n || destabilizers_[i].num_qubits() != n) {
            return "row " + std::to_string(i) + " has the wrong length";
        }
        if (!generators_[i].hermitian()) return "generator " + std::to_string(i) + " is not Hermitian";
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j < i && !commutes(generators_[i], generators_[j])) {
                return "generators " + std::to_string(j) + " and " + std::to_string(i) + " anticommute";
            }
            if (j < i && !commutes(destabilizers_[i], destabilizers_[j])) {
                return "destabilizers " + std::to_string(j) + " and " + std::to_string(i) + " anticommute";
            }
            const bool anti = !commutes(destabilizers_[i], generators_[j]);
            if (anti != (i == j)) {
                return "destabilizer " + std::to_string(i) + " and generator " + std::to_string(j) +
                       (anti ? " anticommute" : " commute");
            }
        }
    }
    return std::nullopt;
}

void StabilizerTableau::apply(const GateApplication& gate) {
    check_gate(gate, num_qubits());
    for (auto& g : generators_) conjugate(g, gate);
    for (auto& d : destabilizers_) conjugate(d, gate);
}

void StabilizerTableau::apply_gate(std::string_view name, const std::vector<std::size_t>& qubits,
                                   PauliLetter cp_letter) {
    apply(GateApplication{parse_gate_kind(name), qubits, cp_letter});
}

std::optional<int> StabilizerTableau::stabilizer_sign(const PauliOperator& p) const {
    const std::size_t n = num_qubits();
    if (p.num_qubits() != n) throw DimensionError("operator length does not match the tableau");
    if (!p.hermitian()) return std::nullopt;
    PauliOperator product(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!commutes(p, generators_[i])) return std::nullopt;
        if (!commutes(p, destabilizers_[i])) product = product * generators_[i];
    }
    return relative_sign(product, p);
}

MeasurementOutcome StabilizerTableau::measure(const PauliOperator& p, std::optional<int> forced, Rng& rng) {
    const std::size_t n = num_qubits();
    if (p.num_qubits() != n) throw DimensionError("measured operator length does not match the tableau");
    if (!p.hermitian()) throw ValidationError("measured operator is not Hermitian");
    if (forced && *forced != 1 && *forced != -1) throw ValidationError("forced outcome must be +1 or -1");
    if (p.is_identity_up_to_phase()) {
        const int value = p.sign();
        if (forced && *forced != value) throw ContradictionError("forced outcome contradicts a deterministic result");
        return {value, true};
    }

    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (!commutes(p, generators_[i])) {
            pivot = i;
            break;
        }
    }
    if (pivot == n) {
        const int value = *stabilizer_sign(p);
        if (forced && *forced != value) throw ContradictionError("forced outcome contradicts a deterministic result");
        return {value, true};
    }

    const PauliOperator old = generators_[pivot];
    for (std::size_t i = 0; i < n; ++i) {
        if (i != pivot && !commutes(p, generators_[i])) {
            generators_[i] = generators_[i] * old;
        }
        if (i != pivot && !commutes(p, destabilizers_[i])) {
            destabilizers_[i] = destabilizers_[i] * old;
            make_hermitian_plus(destabilizers_[i]);
        }
    }
    const int value = forced ? *forced : (rng.coin() ? -1 : 1);
    destabilizers_[pivot] = old;
    make_hermitian_plus(destabilizers_[pivot]);
    generators_[pivot] = p;
    if (value != p.sign()) generators_[pivot].negate();
    return {value, false};
}

MeasurementOutcome StabilizerTableau::measure(const PauliOperator& p, int forced) {
    Rng unused(0);
    return measure(p, std::optional<int>(forced), unused);
}

void StabilizerTableau::negate_generator(std::size_t index) {
    if (index >= num_qubits()) throw DimensionError("generator index out of range");
    generators_[index].negate();
}

StabilizerTableau StabilizerTableau::restrict_to(const std::vector<std::size_t>& kept) const {
    const auto gens = restricted_subgroup_generators(*this, kept);
    if (gens.size() != kept.size()) {
        throw ValidationError("state is entangled across the requested partition");
    }
    std::vector<PauliOperator> local;
    local.reserve(gens.size());
    for (const auto& g : gens) {
        PauliOperator r(kept.size());
        for (std::size_t i = 0; i < kept.size(); ++i) r.set_letter(i, g.letter(kept[i]));
        r.set_sign_exponent(g.sign_exponent());
        local.push_back(std::move(r));
    }
    return from_generators(std::move(local));
}

std::optional<int> is_stabilized_by(const StabilizerTableau& t, const PauliOperator& p) {
    return t.stabilizer_sign(p);
}

bool states_equal(const StabilizerTableau& a, const StabilizerTableau& b) {
    if (a.num_qubits() != b.num_qubits()) return false;
    return std::all_of(a.generators().begin(), a.generators().end(), [&](const PauliOperator& g) {
        const auto s = b.stabilizer_sign(g);
        return s && *s == 1;
    });
}

StabilizerTableau tensor(const StabilizerTableau& a, const StabilizerTableau& b) {
    const std::size_t na = a.num_qubits();
    const std::size_t n = na + b.num_qubits();
    auto embed = [&](const PauliOperator& p, std::size_t offset) {
        PauliOperator out(n);
        for (std::size_t q = 0; q < p.num_qubits(); ++q) out.set_letter(q + offset, p.letter(q));
        out.set_sign_exponent(p.sign_exponent());
        return out;
    };
    std::vector<PauliOperator> gens;
    std::vector<PauliOperator> destab;
    for (std::size_t i = 0; i < na; ++i) {
        gens.push_back(embed(a.generators()[i], 0));
        destab.push_back(embed(a.destabilizers()[i], 0));
    }
    for (std::size_t i = 0; i < b.num_qubits(); ++i) {
        gens.push_back(embed(b.generators()[i], na));
        destab.push_back(embed(b.destabilizers()[i], na));
    }
    return StabilizerTableau::from_rows(std::move(gens), std::move(destab));
}

CanonicalForm canonical_rows(const std::vector<PauliOperator>& generators) {
    CanonicalForm out;
    out.rows = generators;
    if (generators.empty()) return out;
    const std::size_t n = generators.front().num_qubits();
    check_width(generators, n, "generator");
    auto& rows = out.rows;
    // Columns in order z_0..z_{n-1}, x_0..x_{n-1}: the z pivots come first and
    // the rows left without one are X-type.
    auto bit = [n](const PauliOperator& p, std::size_t c) { return c < n ? p.z().get(c) : p.x().get(c - n); };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < 2 * n && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !bit(rows[pivot], c)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != rank && bit(rows[i], c)) rows[i] = rows[i] * rows[rank];
        }
        if (c < n) ++out.z_rank;
        ++rank;
    }
    return out;
}

StabilizerTableau canonical_form(const StabilizerTableau& t) {
    return StabilizerTableau::from_generators(canonical_rows(t.generators()).rows);
}

std::vector<std::vector<GateApplication>> random_clifford_layers(std::size_t n, std::uint64_t seed) {
    static constexpr GateKind kSingles[] = {GateKind::H, GateKind::S, GateKind::SDG,
                                            GateKind::X, GateKind::Y, GateKind::Z};
    Rng rng(seed);
    std::vector<std::vector<GateApplication>> layers;
    for (std::size_t round = 0; round < 2 * n; ++round) {
        std::vector<GateApplication> singles;
        for (std::size_t q = 0; q < n; ++q) {
            // Index 6 leaves the qubit idle.
            const auto pick = rng.below(7);
            if (pick < 6) singles.push_back({kSingles[pick], {q}});
        }
        if (!singles.empty()) layers.push_back(std::move(singles));

        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::shuffle(order.begin(), order.end(), rng.engine());
        std::vector<GateApplication> pairs;
        for (std::size_t i = 0; i + 1 < n; i += 2) {
            if (rng.coin()) {
                pairs.push_back({GateKind::CNOT, {order[i], order[i + 1]}});
            } else {
                pairs.push_back({GateKind::CZ, {order[i], order[i + 1]}});
            }
        }
        if (!pairs.empty()) layers.push_back(std::move(pairs));
    }
    return layers;
}

StabilizerTableau random_stabilizer_state(std::size_t n, std::uint64_t seed) {
    if (n > 64) throw ResourceGuardError("random stabilizer states are limited to 64 qubits");
    auto t = StabilizerTableau::zero_state(n);
    for (const auto& layer : random_clifford_layers(n, seed)) {
        for (const auto& gate : layer) t.apply(gate);
    }
    return t;
}

PauliOperator group_element(const std::vector<PauliOperator>& generators, const BitVector& mask) {
    if (generators.empty()) return PauliOperator(0);
    PauliOperator out(generators.front().num_qubits());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (mask.get(i)) out = out * generators[i];
    }
    return out;
}

std::vector<PauliOperator> restricted_subgroup_generators(const StabilizerTableau& t,
                                                          const std::vector<std::size_t>& subset) {
    std::vector<PauliOperator> out;
    for (const auto& combo : supported_combinations(t, subset)) out.push_back(group_element(t.generators(), combo));
    return out;
}

std::vector<PauliOperator> restricted_group_elements(const StabilizerTableau& t,
                                                     const std::vector<std::size_t>& subset) {
    if (subset.size() > kMaxEnumeratedSupport && t.num_qubits() > kMaxEnumeratedSupport) {
        throw ResourceGuardError("restricted group enumeration is limited to 20 qubits");
    }
    const auto basis = restricted_subgroup_generators(t, subset);
    const std::size_t d = basis.size();
    std::vector<PauliOperator> out;
    out.reserve(std::size_t{1} << d);
    PauliOperator current(t.num_qubits());
    out.push_back(current);
    // Gray code walk: step k toggles the basis element at the lowest set bit of k.
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << d); ++k) {
        const auto bit = static_cast<std::size_t>(__builtin_ctzll(k));
        current = current * basis[bit];
        out.push_back(current);
    }
    std::sort(out.begin(), out.end(), weight_lex_less);
    return out;
}

}  // namespace adaptstab
