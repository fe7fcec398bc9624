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

#include "adaptstab/bounds.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "adaptstab/densesim.h"
#include "adaptstab/errors.h"
#include "adaptstab/metrics.h"

namespace adaptstab {
namespace {

double lightcone(const ResourceProfile& p, std::size_t layers) { return g_value(p.fan_in, layers, p.geometry); }

// 2L - 1 layers of lightcone; a depth-0 circuit has none.
std::size_t doubled_depth(const ResourceProfile& p) { return p.depth == 0 ? 0 : 2 * p.depth - 1; }

BoundResult make_result(std::string name, double lhs, double rhs, const ResourceProfile& p) {
    BoundResult r;
    r.check = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.satisfied = lhs + 1e-9 >= rhs;
    r.profile = p;
    return r;
}

void check_profile(const ResourceProfile& p) {
    if (p.m < p.n) throw ValidationError("profile has fewer total qubits than target qubits");
    if (p.fan_in < 2) throw ValidationError("fan-in must be at least 2");
}

}  // namespace

ResourceProfile profile_circuit(const AdaptiveCircuit& c, std::size_t n_target, std::optional<std::size_t> fan_in,
                                const Geometry& geometry) {
    ResourceProfile p;
    p.n = n_target;
    p.m = c.num_qubits();
    if (p.m < p.n) throw DimensionError("target has more qubits than the circuit");
    p.fan_in = fan_in.value_or(std::max<std::size_t>(2, max_fan_in(c)));
    p.depth = depth(c);
    p.geometry = geometry;
    return p;
}

BoundResult check_nonadaptive(const ResourceProfile& profile, double weight) {
    check_profile(profile);
    if (profile.ancillas() != 0) throw ValidationError("non-adaptive check needs a profile without ancillas");
    return make_result("nonadaptive", lightcone(profile, profile.depth), weight, profile);
}

BoundResult check_adaptive_weight(const ResourceProfile& profile, double weight) {
    check_profile(profile);
    const double factor = static_cast<double>(profile.ancillas() + 1);
    auto r = make_result("adaptive_weight", factor * lightcone(profile, doubled_depth(profile)), weight, profile);
    r.conjectured_lhs = factor * lightcone(profile, profile.depth);
    if (profile.ancillas() == 0) {
        r.warning = "no ancillas: the non-adaptive check is tighter for this profile";
    }
    return r;
}

BoundResult check_clifford_adaptive(const ResourceProfile& profile, double stabilizer_weight) {
    check_profile(profile);
    const double factor = static_cast<double>(profile.ancillas() + 1);
    return make_result("clifford_adaptive", factor * lightcone(profile, profile.depth), stabilizer_weight, profile);
}

BoundResult check_correlation(const ResourceProfile& profile, std::size_t w, double correlation_range) {
    check_profile(profile);
    if (w < 1 || 2 * w > profile.n) throw ValidationError("correlation check needs 1 <= w <= n/2");
    const double lhs = static_cast<double>(profile.ancillas() + w) * lightcone(profile, doubled_depth(profile)) +
                       static_cast<double>(w) - 1.0;
    return make_result("correlation_w" + std::to_string(w), lhs, correlation_range, profile);
}

BoundResult check_permutation_invariant(const ResourceProfile& profile) {
    check_profile(profile);
    const double factor = static_cast<double>(profile.ancillas() + 1);
    return make_result("permutation_invariant", factor * lightcone(profile, doubled_depth(profile)),
                       static_cast<double>(profile.n), profile);
}

bool is_permutation_invariant(const StabilizerTableau& t) {
    for (std::size_t q = 0; q + 1 < t.num_qubits(); ++q) {
        StabilizerTableau swapped = t;
        swapped.apply({GateKind::SWAP, {q, q + 1}});
        if (!states_equal(swapped, t)) return false;
    }
    return true;
}

ToleranceRow approximate_tolerance_table(std::string_view family, std::size_t n, std::size_t k) {
    ToleranceRow row;
    row.family = std::string(family);
    row.n = n;
    const double nd = static_cast<double>(n);
    if (family == "ghz") {
        row.delta = 1.0;
        row.closed_form = "1/36";
        row.closed_form_value = 1.0 / 36.0;
    } else if (family == "hypergraph") {
        const double t = std::pow(2.0, 2.0 - nd);
        row.delta = t * (1.0 - t);
        row.closed_form = "1/(9*4^n)";
        row.closed_form_value = 1.0 / (9.0 * std::pow(4.0, nd));
    } else if (family == "w" || family == "dicke") {
        if (family == "w") k = 1;
        if (k > n) throw ValidationError("Dicke excitation count exceeds n");
        for (std::size_t w = 1; 2 * w <= n; ++w) row.delta = std::max(row.delta, dicke_correlation_formula(n, k, w));
        row.closed_form = family == "w" ? "O(1)" : "O(k^2/n^2)";
    } else {
        throw ValidationError("unknown tolerance family '" + std::string(family) + "'");
    }
    row.tolerance = row.delta * row.delta / 36.0;
    return row;
}

}  // namespace adaptstab
