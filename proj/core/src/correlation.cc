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

#include "adaptstab/correlation.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "adaptstab/errors.h"
#include "adaptstab/rng.h"

namespace adaptstab {
namespace {

constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
constexpr std::size_t kMaxPauliRegion = 3;
constexpr std::size_t kMaxRangeQubits = 12;

// Pauli string on k local qubits as (x, z) masks; position i sits at bit k-1-i.
struct LocalPauli {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    unsigned y_count = 0;
    std::string letters;
};

std::vector<LocalPauli> local_paulis(std::size_t k) {
    std::vector<LocalPauli> out;
    const std::uint64_t total = std::uint64_t{1} << (2 * k);
    for (std::uint64_t code = 1; code < total; ++code) {
        LocalPauli p;
        for (std::size_t i = 0; i < k; ++i) {
            const auto digit = static_cast<unsigned>((code >> (2 * (k - 1 - i))) & 3U);
            const std::uint64_t bit = std::uint64_t{1} << (k - 1 - i);
            if ((digit & 1U) != 0) p.x |= bit;
            if ((digit & 2U) != 0) p.z |= bit;
            if (digit == 3U) ++p.y_count;
            p.letters.push_back(kLetters[digit]);
        }
        out.push_back(std::move(p));
    }
    return out;
}

// tr(rho P) with P = i^{#Y} X^x Z^z.
double pauli_trace(const Eigen::MatrixXcd& rho, std::uint64_t x, std::uint64_t z, unsigned y_count) {
    Complex sum = 0.0;
    const auto dim = static_cast<std::uint64_t>(rho.rows());
    for (std::uint64_t b = 0; b < dim; ++b) {
        const Complex term = rho(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b ^ x));
        sum += (std::popcount(b & z) & 1) != 0 ? -term : term;
    }
    static const Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return (kPowers[y_count & 3U] * sum).real();
}

std::vector<std::size_t> concat(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Eigen::MatrixXcd sign_operator(const Eigen::MatrixXcd& m) {
    const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
    Eigen::VectorXd signs = solver.eigenvalues().unaryExpr([](double v) { return v >= 0.0 ? 1.0 : -1.0; });
    return solver.eigenvectors() * signs.cast<Complex>().asDiagonal() * solver.eigenvectors().adjoint();
}

Eigen::MatrixXcd local_pauli_matrix(const LocalPauli& p) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (char c : p.letters) {
        const Eigen::Matrix2cd site = pauli_matrix(pauli_letter_from_char(c));
        Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = m(i, j) * site;
        }
        m = std::move(next);
    }
    return m;
}

// All size-w subsets of `items`, lexicographic.
std::vector<std::vector<std::size_t>> combinations(const std::vector<std::size_t>& items, std::size_t w) {
    std::vector<std::vector<std::size_t>> out;
    if (w > items.size()) return out;
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
        std::vector<std::size_t> pick;
        for (auto i : idx) pick.push_back(items[i]);
        out.push_back(std::move(pick));
        std::size_t pos = w;
        while (pos > 0 && idx[pos - 1] == items.size() - w + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < w; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

bool disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::none_of(a.begin(), a.end(), [&](std::size_t q) { return std::find(b.begin(), b.end(), q) != b.end(); });
}

PairCorrelation pair_correlation(const StateVector& s, const std::vector<std::size_t>& a1,
                                 const std::vector<std::size_t>& a2, CorrelationMethod method,
                                 const CorrelationOptions& options) {
    return method == CorrelationMethod::kPauli ? max_pauli_correlation(s, a1, a2)
                                               : max_alternating_correlation(s, a1, a2, options);
}

void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::uint64_t& best) {
    if (p == 0 && x == 0) {
        if (std::popcount(r) > std::popcount(best)) best = r;
        return;
    }
    if (std::popcount(r) + std::popcount(p) <= std::popcount(best)) return;
    const std::uint64_t px = p | x;
    std::size_t pivot = static_cast<std::size_t>(std::countr_zero(px));
    int pivot_degree = -1;
    for (std::uint64_t rest = px; rest != 0; rest &= rest - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(rest));
        const int deg = std::popcount(p & adj[u]);
        if (deg > pivot_degree) {
            pivot_degree = deg;
            pivot = u;
        }
    }
    for (std::uint64_t cand = p & ~adj[pivot]; cand != 0; cand &= cand - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(cand));
        const std::uint64_t bit = std::uint64_t{1} << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], best);
        p &= ~bit;
        x |= bit;
    }
}

std::uint64_t mask_of(const std::vector<std::size_t>& qubits) {
    std::uint64_t m = 0;
    for (auto q : qubits) m |= std::uint64_t{1} << q;
    return m;
}

}  // namespace

std::string_view method_name(CorrelationMethod method) {
    return method == CorrelationMethod::kPauli ? "pauli" : "alt";
}

CorrelationMethod parse_method(std::string_view name) {
    if (name == "pauli") return CorrelationMethod::kPauli;
    if (name == "alt" || name == "alternating") return CorrelationMethod::kAlternating;
    throw ParseError("unknown correlation method '" + std::string(name) + "'");
}

PairCorrelation max_pauli_correlation(const StateVector& s, const std::vector<std::size_t>& a1,
                                      const std::vector<std::size_t>& a2) {
    if (a1.empty() || a2.empty()) throw ValidationError("correlation regions must be non-empty");
    if (!disjoint(a1, a2)) throw ValidationError("correlation regions overlap");
    if (a1.size() > kMaxPauliRegion || a2.size() > kMaxPauliRegion) {
        throw ResourceGuardError("Pauli enumeration is limited to regions of 3 qubits");
    }
    const Eigen::MatrixXcd rho = reduced_density_matrix(s, concat(a1, a2));
    const auto ops1 = local_paulis(a1.size());
    const auto ops2 = local_paulis(a2.size());
    const std::size_t shift = a2.size();
    std::vector<double> e1(ops1.size());
    std::vector<double> e2(ops2.size());
    for (std::size_t i = 0; i < ops1.size(); ++i) {
        e1[i] = pauli_trace(rho, ops1[i].x << shift, ops1[i].z << shift, ops1[i].y_count);
    }
    for (std::size_t j = 0; j < ops2.size(); ++j) e2[j] = pauli_trace(rho, ops2[j].x, ops2[j].z, ops2[j].y_count);

    PairCorrelation best;
    best.value = -1.0;
    for (std::size_t i = 0; i < ops1.size(); ++i) {
        for (std::size_t j = 0; j < ops2.size(); ++j) {
            const double joint = pauli_trace(rho, (ops1[i].x << shift) | ops2[j].x, (ops1[i].z << shift) | ops2[j].z,
                                             ops1[i].y_count + ops2[j].y_count);
            const double value = std::abs(joint - e1[i] * e2[j]);
            if (value > best.value + 1e-15) best = {value, ops1[i].letters, ops2[j].letters};
        }
    }
    return best;
}

PairCorrelation max_alternating_correlation(const StateVector& s, const std::vector<std::size_t>& a1,
                                            const std::vector<std::size_t>& a2, const CorrelationOptions& options) {
    if (a1.empty() || a2.empty()) throw ValidationError("correlation regions must be non-empty");
    if (!disjoint(a1, a2)) throw ValidationError("correlation regions overlap");
    const auto d1 = static_cast<Eigen::Index>(std::uint64_t{1} << a1.size());
    const auto d2 = static_cast<Eigen::Index>(std::uint64_t{1} << a2.size());
    const Eigen::MatrixXcd rho12 = reduced_density_matrix(s, concat(a1, a2));
    const Eigen::MatrixXcd rho1 = reduced_density_matrix(s, a1);
    const Eigen::MatrixXcd rho2 = reduced_density_matrix(s, a2);
    Eigen::MatrixXcd delta = rho12;
    for (Eigen::Index i1 = 0; i1 < d1; ++i1) {
        for (Eigen::Index j1 = 0; j1 < d1; ++j1) delta.block(i1 * d2, j1 * d2, d2, d2) -= rho1(i1, j1) * rho2;
    }

    // M1 = tr_2[(I (x) O2) Delta], M2 = tr_1[(O1 (x) I) Delta].
    auto reduce_first = [&](const Eigen::MatrixXcd& o2) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d1, d1);
        for (Eigen::Index i1 = 0; i1 < d1; ++i1) {
            for (Eigen::Index j1 = 0; j1 < d1; ++j1) {
                m(i1, j1) = (o2.transpose().cwiseProduct(delta.block(i1 * d2, j1 * d2, d2, d2))).sum();
            }
        }
        return m;
    };
    auto reduce_second = [&](const Eigen::MatrixXcd& o1) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d2, d2);
        for (Eigen::Index k = 0; k < d1; ++k) {
            for (Eigen::Index l = 0; l < d1; ++l) m += o1(k, l) * delta.block(l * d2, k * d2, d2, d2);
        }
        return m;
    };

    auto ascend = [&](Eigen::MatrixXcd o2) {
        double value = -1.0;
        for (std::size_t it = 0; it < options.max_iterations; ++it) {
            const Eigen::MatrixXcd o1 = sign_operator(reduce_first(o2));
            const Eigen::MatrixXcd m2 = reduce_second(o1);
            o2 = sign_operator(m2);
            const double next = std::abs((o2 * m2).trace().real());
            if (next - value < options.convergence) {
                value = std::max(value, next);
                break;
            }
            value = next;
        }
        return value;
    };

    PairCorrelation best{-1.0, "sign-op", "sign-op"};
    if (a1.size() <= kMaxPauliRegion && a2.size() <= kMaxPauliRegion) {
        const PairCorrelation pauli = max_pauli_correlation(s, a1, a2);
        LocalPauli start;
        start.letters = pauli.second;
        best = {ascend(local_pauli_matrix(start)), "sign-op", "sign-op"};
        best.value = std::max(best.value, pauli.value);
    }
    Rng rng(options.seed);
    for (std::size_t r = 0; r < options.restarts; ++r) {
        Eigen::MatrixXcd g(d2, d2);
        for (Eigen::Index i = 0; i < d2; ++i) {
            for (Eigen::Index j = 0; j < d2; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
        }
        best.value = std::max(best.value, ascend(sign_operator(g + g.adjoint())));
    }
    best.value = std::max(best.value, 0.0);
    return best;
}

CorrelationReport correlation_strength_w(const StateVector& s, const std::vector<std::size_t>& region, std::size_t w,
                                         CorrelationMethod method, const CorrelationOptions& options) {
    if (w == 0) throw ValidationError("w must be at least 1");
    if (region.size() < 2 * w) throw ValidationError("region holds no pair of disjoint size-w subsets");
    if (method == CorrelationMethod::kPauli && w > kMaxPauliRegion) {
        throw ResourceGuardError("Pauli enumeration is limited to w <= 3");
    }
    for (auto q : region) {
        if (q >= s.num_qubits()) throw DimensionError("region qubit out of range");
    }
    CorrelationReport report;
    report.region = region;
    report.w = w;
    report.method = method;
    report.value = std::numeric_limits<double>::infinity();
    const auto subsets = combinations(region, w);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            if (!disjoint(subsets[i], subsets[j])) continue;
            const PairCorrelation pair = pair_correlation(s, subsets[i], subsets[j], method, options);
            if (pair.value < report.value) {
                report.value = pair.value;
                report.first_region = subsets[i];
                report.second_region = subsets[j];
                report.pair = pair;
            }
        }
    }
    return report;
}

double pauli_correlation_strength(const StateVector& s, const std::vector<std::size_t>& region) {
    if (region.size() < 2) throw ValidationError("region needs at least two qubits");
    double out = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < region.size(); ++i) {
        for (std::size_t j = i + 1; j < region.size(); ++j) {
            out = std::min(out, max_pauli_correlation(s, {region[i]}, {region[j]}).value);
        }
    }
    return out;
}

std::vector<std::size_t> maximum_clique(const std::vector<std::uint64_t>& adjacency) {
    const std::size_t n = adjacency.size();
    if (n > 64) throw ResourceGuardError("clique search is limited to 64 vertices");
    if (n == 0) return {};
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> adj(adjacency);
    for (std::size_t v = 0; v < n; ++v) adj[v] &= all & ~(std::uint64_t{1} << v);
    std::uint64_t best = 1;  // any single vertex
    bron_kerbosch(adj, 0, all, 0, best);
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v) {
        if ((best >> v) & 1U) out.push_back(v);
    }
    return out;
}

std::size_t pauli_correlation_range(const StateVector& s, double tolerance) {
    const std::size_t n = s.num_qubits();
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (max_pauli_correlation(s, {i}, {j}).value > tolerance) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
        }
    }
    return maximum_clique(adj).size();
}

std::size_t correlation_range_w(const StateVector& s, std::size_t w, double delta, CorrelationMethod method,
                                const CorrelationOptions& options) {
    const std::size_t n = s.num_qubits();
    if (w == 0) throw ValidationError("w must be at least 1");
    const std::size_t vacuous = std::min(n, 2 * w - 1);
    if (2 * w > n) return vacuous;
    std::vector<std::size_t> all(n);
    for (std::size_t q = 0; q < n; ++q) all[q] = q;

    if (w == 1) {
        std::vector<std::uint64_t> adj(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (pair_correlation(s, {i}, {j}, method, options).value > delta) {
                    adj[i] |= std::uint64_t{1} << j;
                    adj[j] |= std::uint64_t{1} << i;
                }
            }
        }
        return std::max(vacuous, maximum_clique(adj).size());
    }

    if (n > kMaxRangeQubits) throw ResourceGuardError("correlation range for w > 1 is limited to 12 qubits");
    // A region qualifies when every disjoint pair of size-w subsets inside it
    // is correlated above delta; record the failing pairs once.
    const auto subsets = combinations(all, w);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> weak;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            if (!disjoint(subsets[i], subsets[j])) continue;
            if (pair_correlation(s, subsets[i], subsets[j], method, options).value <= delta) {
                weak.emplace_back(mask_of(subsets[i]), mask_of(subsets[j]));
            }
        }
    }
    std::size_t best = vacuous;
    for (std::uint64_t region = 1; region < (std::uint64_t{1} << n); ++region) {
        const auto size = static_cast<std::size_t>(std::popcount(region));
        if (size <= best) continue;
        const bool ok = std::none_of(weak.begin(), weak.end(), [region](const auto& p) {
            return (p.first & ~region) == 0 && (p.second & ~region) == 0;
        });
        if (ok) best = size;
    }
    return best;
}

GlobalCorrelation global_correlation(const StateVector& s, const CorrelationOptions& options) {
    std::vector<std::size_t> all(s.num_qubits());
    for (std::size_t q = 0; q < all.size(); ++q) all[q] = q;
    return {correlation_strength_w(s, all, 1, CorrelationMethod::kPauli, options),
            correlation_strength_w(s, all, 1, CorrelationMethod::kAlternating, options)};
}

}  // namespace adaptstab
