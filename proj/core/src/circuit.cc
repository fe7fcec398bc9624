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

#include "adaptstab/circuit.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "adaptstab/errors.h"

namespace adaptstab {

bool ClassicalCondition::fires(const std::vector<int>& record) const {
    int parity = 0;
    for (auto b : bits) parity ^= record.at(b) & 1;
    return parity == xor_value;
}

Operation Operation::make_gate(GateKind kind, std::vector<std::size_t> qubits, PauliLetter letter) {
    Operation op;
    op.gate = GateApplication{kind, std::move(qubits), letter};
    return op;
}

Operation Operation::make_conditioned(GateKind kind, std::vector<std::size_t> qubits, ClassicalCondition condition) {
    Operation op = make_gate(kind, std::move(qubits));
    op.condition = std::move(condition);
    return op;
}

Operation Operation::make_measure(std::size_t qubit, std::size_t cbit) {
    Operation op;
    op.kind = Kind::kMeasure;
    op.qubit = qubit;
    op.cbit = cbit;
    return op;
}

std::vector<std::size_t> Operation::qubits() const {
    if (is_measure()) return {qubit};
    return gate.qubits;
}

void AdaptiveCircuit::append(const AdaptiveCircuit& other, std::size_t qubit_offset) {
    if (other.num_qubits() + qubit_offset > num_qubits_) throw DimensionError("appended circuit does not fit");
    const std::size_t cbit_offset = num_cbits_;
    for (Layer layer : other.layers()) {
        for (auto& op : layer) {
            if (op.is_measure()) {
                op.qubit += qubit_offset;
                op.cbit += cbit_offset;
            } else {
                for (auto& q : op.gate.qubits) q += qubit_offset;
                if (op.condition) {
                    for (auto& b : op.condition->bits) b += cbit_offset;
                }
            }
        }
        layers_.push_back(std::move(layer));
    }
    num_cbits_ += other.num_cbits();
}

std::vector<std::size_t> AdaptiveCircuit::measured_qubits() const {
    std::set<std::size_t> out;
    for (const auto& layer : layers_) {
        for (const auto& op : layer) {
            if (op.is_measure()) out.insert(op.qubit);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<std::size_t> AdaptiveCircuit::surviving_qubits() const {
    const auto measured = measured_qubits();
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        if (!std::binary_search(measured.begin(), measured.end(), q)) out.push_back(q);
    }
    return out;
}

Geometry Geometry::grid(std::size_t dimensions, std::vector<std::size_t> side_lengths) {
    if (dimensions == 0) throw ValidationError("grid needs at least one dimension");
    if (!side_lengths.empty() && side_lengths.size() != dimensions) {
        throw ValidationError("grid side lengths do not match its dimension");
    }
    if (side_lengths.empty() && dimensions != 1) throw ValidationError("multi-dimensional grids need side lengths");
    return Geometry{Kind::kGrid, dimensions, std::move(side_lengths)};
}

std::vector<std::size_t> Geometry::coordinates(std::size_t qubit, std::size_t num_qubits) const {
    if (kind == Kind::kAllToAll) return {};
    if (side_lengths.empty()) return {qubit};
    std::size_t capacity = 1;
    for (auto s : side_lengths) capacity *= s;
    if (num_qubits > capacity) throw DimensionError("grid is too small for the register");
    std::vector<std::size_t> coords(dimensions);
    for (std::size_t axis = dimensions; axis-- > 0;) {
        coords[axis] = qubit % side_lengths[axis];
        qubit /= side_lengths[axis];
    }
    return coords;
}

bool Geometry::is_local(const std::vector<std::size_t>& qubits, std::size_t fan_in, std::size_t num_qubits) const {
    if (kind == Kind::kAllToAll || qubits.size() < 2) return true;
    std::vector<std::size_t> lo = coordinates(qubits.front(), num_qubits);
    std::vector<std::size_t> hi = lo;
    for (auto q : qubits) {
        const auto c = coordinates(q, num_qubits);
        for (std::size_t axis = 0; axis < c.size(); ++axis) {
            lo[axis] = std::min(lo[axis], c[axis]);
            hi[axis] = std::max(hi[axis], c[axis]);
        }
    }
    for (std::size_t axis = 0; axis < lo.size(); ++axis) {
        if (hi[axis] - lo[axis] + 1 > fan_in) return false;
    }
    return true;
}

std::string Geometry::describe() const {
    if (kind == Kind::kAllToAll) return "all";
    return "grid:" + std::to_string(dimensions);
}

std::string ValidationReport::summary() const {
    if (ok()) return "valid";
    std::ostringstream out;
    for (const auto& v : violations) out << "layer " << v.layer << ": " << v.message << '\n';
    return out.str();
}

ValidationReport validate(const AdaptiveCircuit& c, std::size_t fan_in, const Geometry& geometry) {
    ValidationReport report;
    const std::size_t m = c.num_qubits();
    constexpr std::size_t kNever = static_cast<std::size_t>(-1);
    std::vector<std::size_t> written_at(c.num_cbits(), kNever);
    std::vector<std::size_t> measured_at(m, kNever);
    auto flag = [&report](std::size_t layer, std::string message) {
        report.violations.push_back({layer, std::move(message)});
    };

    for (std::size_t l = 0; l < c.layers().size(); ++l) {
        const auto& layer = c.layers()[l];
        if (layer.empty()) flag(l, "empty layer");
        std::vector<bool> used(m, false);
        for (const auto& op : layer) {
            const auto qubits = op.qubits();
            bool in_range = true;
            for (auto q : qubits) {
                if (q >= m) {
                    flag(l, "qubit " + std::to_string(q) + " out of range");
                    in_range = false;
                }
            }
            if (!in_range) continue;
            for (auto q : qubits) {
                if (used[q]) flag(l, "qubit " + std::to_string(q) + " used twice in one layer");
                used[q] = true;
                if (measured_at[q] != kNever) flag(l, "qubit " + std::to_string(q) + " used after its measurement");
            }
            if (op.is_measure()) {
                if (op.cbit >= c.num_cbits()) {
                    flag(l, "classical bit " + std::to_string(op.cbit) + " out of range");
                } else if (written_at[op.cbit] != kNever) {
                    flag(l, "classical bit " + std::to_string(op.cbit) + " written twice");
                } else {
                    written_at[op.cbit] = l;
                }
                continue;
            }
            try {
                check_gate(op.gate, m);
            } catch (const std::exception& e) {
                flag(l, e.what());
            }
            if (qubits.size() > fan_in) {
                flag(l, std::string(gate_name(op.gate.kind)) + " has fan-in " + std::to_string(qubits.size()) +
                            " above " + std::to_string(fan_in));
            }
            if (!geometry.is_local(qubits, fan_in, m)) {
                flag(l, std::string(gate_name(op.gate.kind)) + " is not local on " + geometry.describe());
            }
            if (op.condition) {
                if (op.condition->xor_value != 0 && op.condition->xor_value != 1) flag(l, "condition xor must be 0 or 1");
                for (auto b : op.condition->bits) {
                    if (b >= c.num_cbits() || written_at[b] == kNever || written_at[b] >= l) {
                        flag(l, "condition reads classical bit " + std::to_string(b) + " before it is written");
                    }
                }
            }
        }
        for (const auto& op : layer) {
            if (!op.is_measure() || op.qubit >= m) continue;
            measured_at[op.qubit] = l;
        }
    }
    return report;
}

std::size_t depth(const AdaptiveCircuit& c) {
    return static_cast<std::size_t>(std::count_if(c.layers().begin(), c.layers().end(), [](const Layer& layer) {
        return std::any_of(layer.begin(), layer.end(), [](const Operation& op) { return !op.merged; });
    }));
}

std::size_t ancilla_count(const AdaptiveCircuit& c, std::size_t n_target) {
    if (n_target > c.num_qubits()) throw DimensionError("target has more qubits than the circuit");
    return c.num_qubits() - n_target;
}

std::size_t max_fan_in(const AdaptiveCircuit& c) {
    std::size_t out = 0;
    for (const auto& layer : c.layers()) {
        for (const auto& op : layer) out = std::max(out, op.qubits().size());
    }
    return out;
}

StabilizerTableau simulate_full(const AdaptiveCircuit& c, const OutcomePolicy& policy,
                                const std::optional<StabilizerTableau>& initial, std::vector<int>* outcomes) {
    const std::size_t m = c.num_qubits();
    StabilizerTableau t = initial ? *initial : StabilizerTableau::zero_state(m);
    if (t.num_qubits() != m) throw DimensionError("initial state size does not match the circuit");
    if (policy.forced && policy.bits.size() < c.num_cbits()) {
        throw DimensionError("forced outcome list is shorter than the classical register");
    }
    Rng rng(policy.seed);
    std::vector<int> record(c.num_cbits(), 0);
    for (const auto& layer : c.layers()) {
        for (const auto& op : layer) {
            if (op.is_measure()) {
                std::optional<int> forced;
                if (policy.forced) forced = policy.bits[op.cbit] ? -1 : 1;
                const auto result = t.measure(PauliOperator::single(m, op.qubit, PauliLetter::Z), forced, rng);
                record.at(op.cbit) = result.value < 0 ? 1 : 0;
            } else if (!op.condition || op.condition->fires(record)) {
                t.apply(op.gate);
            }
        }
    }
    if (outcomes != nullptr) *outcomes = std::move(record);
    return t;
}

SimulationResult simulate(const AdaptiveCircuit& c, const OutcomePolicy& policy,
                          const std::optional<StabilizerTableau>& initial) {
    SimulationResult result;
    const StabilizerTableau full = simulate_full(c, policy, initial, &result.outcomes);
    result.survivors = c.surviving_qubits();
    result.state = full.restrict_to(result.survivors);
    return result;
}

std::set<std::size_t> forward_lightcone(const AdaptiveCircuit& c, const std::set<std::size_t>& region,
                                        std::size_t from_layer) {
    std::set<std::size_t> cone = region;
    for (std::size_t l = from_layer; l < c.layers().size(); ++l) {
        for (const auto& op : c.layers()[l]) {
            const auto qs = op.qubits();
            if (std::any_of(qs.begin(), qs.end(), [&](std::size_t q) { return cone.count(q) != 0; })) {
                cone.insert(qs.begin(), qs.end());
            }
        }
    }
    return cone;
}

std::set<std::size_t> backward_lightcone(const AdaptiveCircuit& c, const std::set<std::size_t>& region) {
    std::set<std::size_t> cone = region;
    for (auto it = c.layers().rbegin(); it != c.layers().rend(); ++it) {
        for (const auto& op : *it) {
            const auto qs = op.qubits();
            if (std::any_of(qs.begin(), qs.end(), [&](std::size_t q) { return cone.count(q) != 0; })) {
                cone.insert(qs.begin(), qs.end());
            }
        }
    }
    return cone;
}

double g_value(std::size_t fan_in, std::size_t depth, const Geometry& geometry) {
    if (fan_in < 2) throw ValidationError("fan-in must be at least 2");
    const auto d = static_cast<double>(depth);
    if (geometry.kind == Geometry::Kind::kAllToAll) return std::pow(static_cast<double>(fan_in), d);
    return std::pow(2.0 * static_cast<double>(fan_in - 1) * d + 1.0, static_cast<double>(geometry.dimensions));
}

AdaptiveCircuit random_clifford_circuit(std::size_t n, std::uint64_t seed) {
    AdaptiveCircuit c(n);
    for (const auto& gates : random_clifford_layers(n, seed)) {
        Layer layer;
        for (const auto& g : gates) layer.push_back(Operation::make_gate(g.kind, g.qubits, g.letter));
        c.add_layer(std::move(layer));
    }
    return c;
}

}  // namespace adaptstab
