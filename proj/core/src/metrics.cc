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

#include "adaptstab/metrics.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "adaptstab/errors.h"
#include "adaptstab/rng.h"

namespace adaptstab {
namespace {

constexpr std::size_t kMaxGreedyQubits = 20;
constexpr std::size_t kMaxOracleQubits = 14;
constexpr std::size_t kMaxRangeCheckQubits = 12;

std::uint64_t reverse_bits(std::uint64_t v, std::size_t n) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < n; ++i) out |= ((v >> i) & 1U) << (n - 1 - i);
    return out;
}

std::uint64_t low_mask(const BitVector& v) { return v.words().empty() ? 0 : v.words()[0]; }

// Group element described by packed masks and the generator subset producing it.
struct PackedElement {
    std::uint32_t weight = 0;
    std::uint64_t x_key = 0;  // bit-reversed so integer order is string order
    std::uint64_t z_key = 0;
    std::uint64_t symplectic = 0;
    std::uint32_t combo = 0;
};

class XorBasis {
   public:
    bool insert(std::uint64_t v) {
        for (int bit = 63; bit >= 0; --bit) {
            if (((v >> bit) & 1U) == 0) continue;
            if (rows_[static_cast<std::size_t>(bit)] == 0) {
                rows_[static_cast<std::size_t>(bit)] = v;
                return true;
            }
            v ^= rows_[static_cast<std::size_t>(bit)];
        }
        return false;
    }

   private:
    std::array<std::uint64_t, 64> rows_{};
};

std::vector<std::size_t> iota_vector(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

}  // namespace

bool weight_vector_less(const WeightVector& a, const WeightVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MinimalGenerators min_weight_generators(const StabilizerTableau& t) {
    const std::size_t n = t.num_qubits();
    if (n > kMaxGreedyQubits) throw ResourceGuardError("minimal generators need n <= 20");
    const auto& gens = t.generators();
    std::vector<std::uint64_t> gx(n);
    std::vector<std::uint64_t> gz(n);
    for (std::size_t i = 0; i < n; ++i) {
        gx[i] = low_mask(gens[i].x());
        gz[i] = low_mask(gens[i].z());
    }
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<PackedElement> elements;
    elements.reserve(count - 1);
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    std::uint32_t combo = 0;
    for (std::uint64_t k = 1; k < count; ++k) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(k));
        x ^= gx[bit];
        z ^= gz[bit];
        combo ^= std::uint32_t{1} << bit;
        elements.push_back({static_cast<std::uint32_t>(std::popcount(x | z)), reverse_bits(x, n), reverse_bits(z, n),
                            x | (z << n), combo});
    }
    std::sort(elements.begin(), elements.end(), [](const PackedElement& a, const PackedElement& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        if (a.x_key != b.x_key) return a.x_key < b.x_key;
        return a.z_key < b.z_key;
    });

    MinimalGenerators out;
    XorBasis basis;
    for (const auto& e : elements) {
        if (out.generators.size() == n) break;
        if (!basis.insert(e.symplectic)) continue;
        BitVector mask(n);
        for (std::size_t i = 0; i < n; ++i) mask.set(i, ((e.combo >> i) & 1U) != 0);
        out.generators.push_back(group_element(gens, mask));
        out.weights.push_back(e.weight);
    }
    std::reverse(out.generators.begin(), out.generators.end());
    std::reverse(out.weights.begin(), out.weights.end());
    return out;
}

std::size_t stabilizer_weight(const StabilizerTableau& t) {
    const auto w = min_weight_generators(t).weights;
    return w.empty() ? 0 : w.front();
}

std::size_t weight_vector_oracle(const StabilizerTableau& t, std::size_t k) {
    const std::size_t n = t.num_qubits();
    if (n > kMaxOracleQubits) throw ResourceGuardError("weight oracle needs n <= 14");
    if (k < 1 || k > n) throw ValidationError("weight vector index out of range");
    const auto elements = restricted_group_elements(t, iota_vector(n));
    const std::size_t needed = n - k + 1;
    for (std::size_t w = 1; w <= n; ++w) {
        BitMatrix rows(0, 2 * n);
        for (const auto& e : elements) {
            if (e.weight() >= 1 && e.weight() <= w) rows.append_row(e.symplectic_row());
        }
        if (gf2_rank(rows) >= needed) return w;
    }
    return n;
}

double anti_shallowness_lower_from(double correlation) {
    return -std::log2(1.0 - correlation * correlation / 36.0);
}

double anti_shallowness_lower(const StateVector& s) {
    std::vector<std::size_t> all = iota_vector(s.num_qubits());
    if (all.size() < 2) return 0.0;
    return anti_shallowness_lower_from(correlation_strength_w(s, all, 1, CorrelationMethod::kPauli).value);
}

double best_product_fidelity(const StateVector& s, const ProductSearchOptions& options) {
    const std::size_t n = s.num_qubits();
    Rng rng(options.seed);
    double best = 0.0;
    for (std::size_t r = 0; r < options.restarts; ++r) {
        std::vector<Eigen::Vector2cd> sites(n);
        for (auto& v : sites) {
            v = Eigen::Vector2cd(Complex(rng.normal(), rng.normal()), Complex(rng.normal(), rng.normal()));
            v.normalize();
        }
        double value = 0.0;
        for (std::size_t sweep = 0; sweep < options.sweeps; ++sweep) {
            const double before = value;
            for (std::size_t q = 0; q < n; ++q) {
                // <phi_{-q}| psi> as a vector on site q.
                Eigen::Vector2cd env = Eigen::Vector2cd::Zero();
                for (std::uint64_t idx = 0; idx < s.dimension(); ++idx) {
                    Complex weight = s.amplitude(idx);
                    for (std::size_t p = 0; p < n && weight != Complex(0.0); ++p) {
                        if (p == q) continue;
                        weight *= std::conj(sites[p][(idx & s.qubit_mask(p)) != 0 ? 1 : 0]);
                    }
                    env[(idx & s.qubit_mask(q)) != 0 ? 1 : 0] += weight;
                }
                const double norm = env.norm();
                if (norm > 0.0) sites[q] = env / norm;
                value = norm * norm;
            }
            if (value - before < 1e-14) break;
        }
        best = std::max(best, value);
    }
    return std::min(best, 1.0);
}

double anti_shallowness_upper(const StateVector& s, const std::vector<StateVector>& candidates,
                              const ProductSearchOptions& product) {
    if (candidates.empty() && !product.enabled) throw ValidationError("no candidate states and product search disabled");
    double best_fidelity = 0.0;
    for (const auto& c : candidates) best_fidelity = std::max(best_fidelity, fidelity(s, c));
    if (product.enabled) best_fidelity = std::max(best_fidelity, best_product_fidelity(s, product));
    if (best_fidelity <= 0.0) return std::numeric_limits<double>::infinity();
    return std::max(0.0, -std::log2(best_fidelity));
}

double anti_shallowness_continuity(double log_f, double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw ValidationError("eps must lie in [0, 1]");
    if (log_f > 0.0) throw ValidationError("log fidelity must be <= 0");
    const double arg = (1.0 - eps) * std::exp2(log_f) + eps + 2.0 * std::sqrt(eps * (1.0 - eps));
    return std::max(0.0, -std::log2(arg));
}

InequalityCheck correlation_continuity_check(const StateVector& s1, const StateVector& s2,
                                             const SupportedOperator& o1, const SupportedOperator& o2) {
    if (o1.norm() > 1.0 + 1e-12 || o2.norm() > 1.0 + 1e-12) throw ValidationError("operators must have norm <= 1");
    InequalityCheck out;
    out.lhs = std::abs(correlation(s1, o1, o2) - correlation(s2, o1, o2));
    const double eps = std::max(0.0, 1.0 - fidelity(s1, s2));
    out.rhs = 6.0 * std::sqrt(eps);
    out.holds = out.lhs <= out.rhs + 1e-12;
    return out;
}

StabilizerTableau flip_generator_sign(const StabilizerTableau& t, std::size_t index) {
    StabilizerTableau out = t;
    out.negate_generator(index);
    return out;
}

bool local_indistinguishable(const StabilizerTableau& a, const StabilizerTableau& b, std::size_t k) {
    const std::size_t n = a.num_qubits();
    if (b.num_qubits() != n) throw DimensionError("states have different qubit counts");
    if (k >= n) return states_equal(a, b);
    // Every region of size < k sits inside one of size k, so those suffice.
    std::vector<std::size_t> idx = iota_vector(k);
    while (true) {
        if (restricted_group_elements(a, idx) != restricted_group_elements(b, idx)) return false;
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) return true;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

WeightRangeCheck weight_range_check(const StabilizerTableau& t) {
    const std::size_t n = t.num_qubits();
    if (n > kMaxRangeCheckQubits) throw ResourceGuardError("weight/range check needs n <= 12");
    WeightRangeCheck out;
    out.stabilizer_weight = stabilizer_weight(t);
    out.correlation_range = pauli_correlation_range(state_from_tableau(t));
    out.bound = static_cast<double>(out.correlation_range) / std::sqrt(static_cast<double>(n));
    out.holds = static_cast<double>(out.stabilizer_weight) + 1e-12 >= out.bound;
    return out;
}

GrowthCheck operator_growth_check(const PauliOperator& p, const std::vector<GateApplication>& layer,
                                  std::size_t fan_in) {
    std::vector<bool> used(p.num_qubits(), false);
    for (const auto& g : layer) {
        check_gate(g, p.num_qubits());
        if (g.qubits.size() > fan_in) throw ValidationError("gate exceeds the fan-in bound");
        for (auto q : g.qubits) {
            if (used[q]) throw ValidationError("layer gates overlap on qubit " + std::to_string(q));
            used[q] = true;
        }
    }
    GrowthCheck out;
    out.fan_in = fan_in;
    out.before = p.weight();
    PauliOperator image = p;
    for (const auto& g : layer) conjugate(image, g);
    out.after = image.weight();
    out.holds = out.after <= fan_in * out.before;
    return out;
}

}  // namespace adaptstab
