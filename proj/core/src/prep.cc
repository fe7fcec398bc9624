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

#include "adaptstab/prep.h"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "adaptstab/errors.h"

namespace adaptstab {
namespace {

void sort_edges(std::vector<ScheduledEdge>& edges) {
    std::sort(edges.begin(), edges.end(), [](const ScheduledEdge& a, const ScheduledEdge& b) {
        return std::pair(a.qubit, a.check) < std::pair(b.qubit, b.check);
    });
}

bool letters_anticommute(PauliLetter a, PauliLetter b) {
    return a != PauliLetter::I && b != PauliLetter::I && a != b;
}

std::string bit_string(const std::vector<int>& bits) {
    std::string out;
    for (int b : bits) out.push_back(b ? '1' : '0');
    return out;
}

PreparationPlan assemble(const std::vector<PauliOperator>& measured, const std::vector<PauliOperator>& fixed,
                         const AdaptiveCircuit& initial, std::optional<MeasurementSchedule> schedule) {
    if (measured.empty()) throw ValidationError("nothing to measure");
    const std::size_t n = measured.front().num_qubits();
    const auto survivors = initial.surviving_qubits();
    if (survivors.size() != n || (n > 0 && survivors.back() != n - 1)) {
        throw ValidationError("initial circuit must leave exactly qubits 0..n-1 unmeasured");
    }

    PreparationPlan plan;
    plan.measured = measured;
    plan.fixed = fixed;
    std::vector<PauliOperator> all = measured;
    all.insert(all.end(), fixed.begin(), fixed.end());
    plan.target = StabilizerTableau::from_generators(all);
    plan.sparsity = StabilizerCode("measured", measured).sparsity();
    plan.prep_layers = initial.layers().size();

    plan.fragment = synthesize_measurement_circuit(measured, initial.num_qubits(), std::move(schedule));
    AdaptiveCircuit circuit(plan.fragment.circuit.num_qubits());
    circuit.append(initial);
    const std::size_t cbit_offset = circuit.num_cbits();
    circuit.append(plan.fragment.circuit);

    std::vector<PauliOperator> basis;
    std::vector<std::size_t> cbits;
    std::vector<bool> negated;
    for (std::size_t i = 0; i < measured.size(); ++i) {
        std::vector<PauliOperator> others;
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (j != i) others.push_back(all[j]);
        }
        basis.push_back(pauli_correction(others, {measured[i]}));
        cbits.push_back(cbit_offset + plan.fragment.syndrome_cbits[i]);
        negated.push_back(measured[i].sign() < 0);
    }
    auto layers = correction_layers(basis, cbits, negated);
    plan.correction_layers = layers.size();
    for (auto& layer : layers) circuit.add_layer(std::move(layer));
    plan.circuit = std::move(circuit);
    return plan;
}

}  // namespace

std::optional<std::size_t> MeasurementSchedule::color_of(std::size_t qubit, std::size_t check) const {
    for (const auto& e : edges) {
        if (e.qubit == qubit && e.check == check) return e.color;
    }
    return std::nullopt;
}

MeasurementSchedule schedule_measurements(const std::vector<PauliOperator>& checks) {
    const TannerGraph g = tanner_graph(checks);
    std::vector<Edge> edges;
    edges.reserve(g.edges.size());
    for (const auto& e : g.edges) edges.emplace_back(e.qubit, e.check);
    const auto colors = edge_color_bipartite(g.num_qubits, g.num_checks, edges);
    MeasurementSchedule s;
    s.num_qubits = g.num_qubits;
    s.num_checks = g.num_checks;
    s.num_colors = color_count(colors);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        s.edges.push_back({g.edges[i].qubit, g.edges[i].check, g.edges[i].letter, colors[i]});
    }
    return s;
}

MeasurementSchedule make_schedule(const std::vector<PauliOperator>& checks, std::vector<ScheduledEdge> edges) {
    const TannerGraph g = tanner_graph(checks);
    sort_edges(edges);
    if (edges.size() != g.edges.size()) throw ValidationError("schedule does not cover the Tanner graph exactly");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].qubit != g.edges[i].qubit || edges[i].check != g.edges[i].check) {
            throw ValidationError("schedule edge (" + std::to_string(edges[i].qubit) + ", " +
                                  std::to_string(edges[i].check) + ") is not in the Tanner graph");
        }
        edges[i].letter = g.edges[i].letter;
    }
    std::vector<Edge> merged;
    std::vector<std::size_t> colors;
    for (const auto& e : edges) {
        merged.emplace_back(e.qubit, g.num_qubits + e.check);
        colors.push_back(e.color);
    }
    if (!is_proper_edge_coloring(g.num_qubits + g.num_checks, merged, colors)) {
        throw ValidationError("schedule assigns one layer twice to a qubit or check");
    }
    MeasurementSchedule s;
    s.num_qubits = g.num_qubits;
    s.num_checks = g.num_checks;
    s.num_colors = color_count(colors);
    s.edges = std::move(edges);
    return s;
}

bool tangling_parity(const MeasurementSchedule& schedule, std::size_t i, std::size_t j) {
    if (i >= schedule.num_checks || j >= schedule.num_checks) throw DimensionError("check index out of range");
    std::size_t count = 0;
    for (const auto& ei : schedule.edges) {
        if (ei.check != i) continue;
        for (const auto& ej : schedule.edges) {
            if (ej.check != j || ej.qubit != ei.qubit || !letters_anticommute(ei.letter, ej.letter)) continue;
            if (ei.color == ej.color) throw std::logic_error("shared qubit scheduled twice in one layer");
            if (ei.color < ej.color) ++count;
        }
    }
    return count % 2 == 1;
}

std::vector<Edge> tangled_pairs(const MeasurementSchedule& schedule) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < schedule.num_checks; ++i) {
        for (std::size_t j = i + 1; j < schedule.num_checks; ++j) {
            if (tangling_parity(schedule, i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

MeasurementFragment synthesize_measurement_circuit(const std::vector<PauliOperator>& checks,
                                                   std::size_t ancilla_offset,
                                                   std::optional<MeasurementSchedule> schedule) {
    const StabilizerCode validated("fragment", checks);
    const std::size_t n = validated.num_qubits();
    const std::size_t t = checks.size();
    if (ancilla_offset < n) throw ValidationError("ancillas must come after the data qubits");

    MeasurementFragment f;
    f.schedule = schedule ? std::move(*schedule) : schedule_measurements(checks);
    if (f.schedule.num_qubits != n || f.schedule.num_checks != t) {
        throw ValidationError("schedule was built for different checks");
    }
    f.tangled = tangled_pairs(f.schedule);
    f.circuit = AdaptiveCircuit(ancilla_offset + t, t);
    for (std::size_t i = 0; i < t; ++i) {
        f.ancillas.push_back(ancilla_offset + i);
        f.syndrome_cbits.push_back(i);
    }

    auto hadamards = [&] {
        Layer layer;
        for (auto a : f.ancillas) {
            layer.push_back(Operation::make_gate(GateKind::H, {a}));
            layer.back().merged = true;
        }
        return layer;
    };
    f.circuit.add_layer(hadamards());
    for (std::size_t color = 0; color < f.schedule.num_colors; ++color) {
        Layer layer;
        for (const auto& e : f.schedule.edges) {
            if (e.color == color) {
                layer.push_back(Operation::make_gate(GateKind::CP, {f.ancillas[e.check], e.qubit}, e.letter));
            }
        }
        if (layer.empty()) continue;
        f.circuit.add_layer(std::move(layer));
        ++f.controlled_pauli_layers;
    }
    const auto cz_colors = edge_color_general(t, f.tangled);
    f.cz_layers = color_count(cz_colors);
    for (std::size_t color = 0; color < f.cz_layers; ++color) {
        Layer layer;
        for (std::size_t e = 0; e < f.tangled.size(); ++e) {
            if (cz_colors[e] == color) {
                layer.push_back(
                    Operation::make_gate(GateKind::CZ, {f.ancillas[f.tangled[e].first], f.ancillas[f.tangled[e].second]}));
            }
        }
        f.circuit.add_layer(std::move(layer));
    }
    f.circuit.add_layer(hadamards());
    Layer measure;
    for (std::size_t i = 0; i < t; ++i) measure.push_back(Operation::make_measure(f.ancillas[i], f.syndrome_cbits[i]));
    f.circuit.add_layer(std::move(measure));
    return f;
}

PauliOperator pauli_correction(const std::vector<PauliOperator>& commuting,
                               const std::vector<PauliOperator>& anticommuting) {
    std::vector<const PauliOperator*> rows;
    for (const auto& p : commuting) rows.push_back(&p);
    for (const auto& p : anticommuting) rows.push_back(&p);
    if (rows.empty()) throw ValidationError("no constraints given");
    const std::size_t n = rows.front()->num_qubits();
    BitMatrix m(0, 2 * n);
    BitVector rhs(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i]->num_qubits() != n) throw DimensionError("constraint operators differ in length");
        m.append_row(rows[i]->swapped_symplectic_row());
        rhs.set(i, i >= commuting.size());
    }
    const auto solution = gf2_solve(m, rhs);
    if (!solution) throw ValidationError("no Pauli satisfies the requested commutation pattern");
    PauliOperator p(solution->particular.slice(0, n), solution->particular.slice(n, n));
    p.set_sign_exponent(0);
    return p;
}

LogicalConstruction x_type_logical_construction(const StabilizerCode& code) {
    const std::size_t n = code.num_qubits();
    const std::size_t k = code.num_logical();
    const CanonicalForm form = canonical_rows(code.checks());
    LogicalConstruction out;
    out.z_rank = form.z_rank;
    out.a = BitMatrix(0, n);
    out.b = BitMatrix(0, n);
    out.c = BitMatrix(0, n);
    out.d = BitMatrix(0, n);
    for (std::size_t i = 0; i < form.rows.size(); ++i) {
        if (i < form.z_rank) {
            out.a.append_row(form.rows[i].x());
            out.b.append_row(form.rows[i].z());
        } else {
            out.c.append_row(form.rows[i].x());
        }
    }
    std::vector<BitVector> kernel;
    if (out.b.rows() == 0) {
        for (std::size_t q = 0; q < n; ++q) {
            BitVector e(n);
            e.set(q, true);
            kernel.push_back(std::move(e));
        }
    } else {
        kernel = gf2_null_space(out.b);
    }
    // Extend rowspace(C) inside ker(B); the new directions are the logicals.
    Gf2Basis span(n);
    for (const auto& row : out.c.row_vectors()) span.insert(row);
    for (const auto& v : kernel) {
        if (span.insert(v)) {
            out.d.append_row(v);
            out.logicals.emplace_back(v, BitVector(n));
        }
    }
    if (out.logicals.size() != k) {
        throw ValidationError("X-type completion found " + std::to_string(out.logicals.size()) + " logicals, " +
                              std::to_string(k) + " needed (rank deficit " +
                              std::to_string(k - std::min(k, out.logicals.size())) + ")");
    }
    return out;
}

std::vector<PauliOperator> x_type_logicals(const StabilizerCode& code) {
    return x_type_logical_construction(code).logicals;
}

std::vector<Layer> correction_layers(const std::vector<PauliOperator>& basis_corrections,
                                     const std::vector<std::size_t>& cbits, const std::vector<bool>& negated) {
    if (basis_corrections.size() != cbits.size() || negated.size() != cbits.size()) {
        throw DimensionError("correction inputs differ in length");
    }
    if (basis_corrections.empty()) return {};
    const std::size_t n = basis_corrections.front().num_qubits();
    Layer x_layer;
    Layer z_layer;
    for (std::size_t q = 0; q < n; ++q) {
        for (const bool x_part : {true, false}) {
            ClassicalCondition cond;
            int offset = 1;
            for (std::size_t i = 0; i < basis_corrections.size(); ++i) {
                const auto& c = basis_corrections[i];
                if (x_part ? c.x().get(q) : c.z().get(q)) {
                    cond.bits.push_back(cbits[i]);
                    offset ^= negated[i] ? 1 : 0;
                }
            }
            if (cond.bits.empty()) continue;
            cond.xor_value = offset;
            (x_part ? x_layer : z_layer)
                .push_back(Operation::make_conditioned(x_part ? GateKind::X : GateKind::Z, {q}, std::move(cond)));
        }
    }
    std::vector<Layer> out;
    const bool have_x = !x_layer.empty();
    if (have_x) out.push_back(std::move(x_layer));
    if (!z_layer.empty()) {
        // X^a then Z^b on one site is a single conditioned Pauli.
        if (have_x) {
            for (auto& op : z_layer) op.merged = true;
        }
        out.push_back(std::move(z_layer));
    }
    return out;
}

PreparationPlan prepare_state(const StabilizerCode& code) {
    const std::size_t n = code.num_qubits();
    const auto logicals = code.num_logical() > 0 ? x_type_logicals(code) : std::vector<PauliOperator>{};
    AdaptiveCircuit initial(n);
    if (!logicals.empty()) {
        // |+>^n; each H folds into the first controlled-Pauli touching its qubit.
        std::vector<bool> touched(n, false);
        for (const auto& c : code.checks()) {
            for (auto q : c.support()) touched[q] = true;
        }
        const bool all_touched = std::all_of(touched.begin(), touched.end(), [](bool b) { return b; });
        Layer layer;
        for (std::size_t q = 0; q < n; ++q) {
            layer.push_back(Operation::make_gate(GateKind::H, {q}));
            layer.back().merged = all_touched;
        }
        initial.add_layer(std::move(layer));
    }
    return assemble(code.checks(), logicals, initial, std::nullopt);
}

PreparationPlan prepare_state_explicit(const std::vector<PauliOperator>& measured,
                                       const std::vector<PauliOperator>& fixed, const AdaptiveCircuit& initial,
                                       std::optional<MeasurementSchedule> schedule) {
    constexpr std::uint64_t kChecks = 8;
    for (std::uint64_t seed = 0; seed < kChecks; ++seed) {
        const auto run = simulate(initial, OutcomePolicy::random(seed));
        for (const auto& s : fixed) {
            if (s.num_qubits() != run.state.num_qubits()) throw DimensionError("fixed stabilizer length mismatch");
            const auto sign = run.state.stabilizer_sign(s);
            if (!sign || *sign != 1) {
                throw ValidationError("initial state is not stabilized by " + s.to_string());
            }
        }
    }
    return assemble(measured, fixed, initial, std::move(schedule));
}

VerificationReport verify_preparation(const AdaptiveCircuit& circuit, const StabilizerTableau& target,
                                      const VerificationOptions& options) {
    VerificationReport report;
    report.depth = depth(circuit);
    report.ancillas = ancilla_count(circuit, target.num_qubits());
    const std::size_t bits = circuit.num_cbits();
    report.exhaustive_done = options.exhaustive && bits <= options.max_exhaustive_bits;
    const std::size_t patterns = report.exhaustive_done ? (std::size_t{1} << bits) : 0;
    const std::size_t total = options.random_trials + patterns;
    report.random_trials = options.random_trials;

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> infeasible{0};
    std::mutex mu;
    std::size_t first_failure = total;
    std::string failure_text;

    auto worker = [&] {
        for (std::size_t task = next++; task < total; task = next++) {
            OutcomePolicy policy;
            if (task < options.random_trials) {
                policy = OutcomePolicy::random(options.seed + task);
            } else {
                const std::size_t pattern = task - options.random_trials;
                std::vector<int> forced(bits);
                for (std::size_t b = 0; b < bits; ++b) forced[b] = static_cast<int>((pattern >> b) & 1U);
                policy = OutcomePolicy::forcing(std::move(forced));
            }
            std::string problem;
            try {
                const auto result = simulate(circuit, policy);
                if (!states_equal(result.state, target)) {
                    problem = (policy.forced ? "forced outcomes " : "seed " + std::to_string(policy.seed) +
                                                                        " outcomes ") +
                              bit_string(result.outcomes);
                }
            } catch (const ContradictionError&) {
                if (!policy.forced) throw;
                ++infeasible;
            }
            if (!problem.empty()) {
                std::lock_guard<std::mutex> lock(mu);
                if (task < first_failure) {
                    first_failure = task;
                    failure_text = problem;
                }
            }
        }
    };
    std::size_t threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(1, total));
    {
        std::vector<std::jthread> pool;
        for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
        worker();
    }
    report.infeasible_branches = infeasible.load();
    report.branches = patterns - report.infeasible_branches;
    if (first_failure < total) report.counterexample = failure_text;
    report.verified = !report.counterexample.has_value();
    return report;
}

bool check_measurement_transform(const StabilizerTableau& before, const StabilizerTableau& after) {
    const std::size_t m = before.num_qubits();
    const std::size_t n = after.num_qubits();
    if (n > m) throw DimensionError("final state has more qubits than the initial one");
    const auto& gens = before.generators();
    for (const auto& s : after.generators()) {
        // Unknown: which generators of `before` to multiply. Rows fix every
        // x/z bit on the first n qubits and the x bits on the rest.
        BitMatrix system(0, m);
        BitVector rhs(2 * n + (m - n));
        std::size_t row = 0;
        auto add_row = [&](auto bit_of, bool target) {
            BitVector r(m);
            for (std::size_t i = 0; i < m; ++i) r.set(i, bit_of(gens[i]));
            system.append_row(std::move(r));
            rhs.set(row++, target);
        };
        for (std::size_t q = 0; q < n; ++q) {
            add_row([q](const PauliOperator& g) { return g.x().get(q); }, s.x().get(q));
            add_row([q](const PauliOperator& g) { return g.z().get(q); }, s.z().get(q));
        }
        for (std::size_t q = n; q < m; ++q) add_row([q](const PauliOperator& g) { return g.x().get(q); }, false);
        const auto solution = gf2_solve(system, rhs);
        if (!solution) return false;
        // A tail-only Z element with sign -1 rules out the all-+1 branch.
        const bool blocked = std::any_of(solution->null_basis.begin(), solution->null_basis.end(),
                                         [&](const BitVector& c) { return group_element(gens, c).sign() < 0; });
        if (blocked) return false;
        if (group_element(gens, solution->particular).sign_exponent() != s.sign_exponent()) return false;
    }
    return true;
}

}  // namespace adaptstab
