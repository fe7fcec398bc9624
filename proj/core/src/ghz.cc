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

#include <algorithm>
#include <string>

#include "adaptstab/circuit.h"
#include "adaptstab/errors.h"

namespace adaptstab {
namespace {

// Layers copying the root's computational-basis value onto the rest of
// `block`; every holder feeds up to fan_in - 1 new qubits per layer.
std::vector<Layer> fanout_layers(const std::vector<std::size_t>& block, std::size_t fan_in) {
    std::vector<Layer> layers;
    std::vector<std::size_t> holders = {block.front()};
    std::size_t next = 1;
    while (next < block.size()) {
        Layer layer;
        const std::size_t count = holders.size();
        for (std::size_t h = 0; h < count && next < block.size(); ++h) {
            std::vector<std::size_t> qubits = {holders[h]};
            for (std::size_t k = 1; k < fan_in && next < block.size(); ++k) {
                qubits.push_back(block[next]);
                holders.push_back(block[next]);
                ++next;
            }
            layer.push_back(Operation::make_gate(GateKind::CNOT, std::move(qubits)));
        }
        layers.push_back(std::move(layer));
    }
    return layers;
}

void check_ghz_params(std::size_t n, std::size_t a) {
    if (n < 2) throw ValidationError("GHZ preparation needs n >= 2");
    if (a < 1 || a > n) throw ValidationError("block size must satisfy 1 <= a <= n");
}

// Parity-conditioned X on every block after the first: block j flips when the
// ancilla outcomes 0..j-1 have odd parity.
Layer prefix_corrections(const std::vector<std::vector<std::size_t>>& blocks) {
    Layer layer;
    ClassicalCondition cond;
    for (std::size_t j = 1; j < blocks.size(); ++j) {
        cond.bits.push_back(j - 1);
        for (auto q : blocks[j]) layer.push_back(Operation::make_conditioned(GateKind::X, {q}, cond));
    }
    return layer;
}

}  // namespace

std::size_t ghz_fanout_depth(std::size_t a, std::size_t fan_in) {
    if (fan_in < 2) throw ValidationError("fan-in must be at least 2");
    std::size_t depth = 0;
    std::size_t reach = 1;
    while (reach < a) {
        reach *= fan_in;
        ++depth;
    }
    return depth;
}

AdaptiveCircuit ghz_adaptive(std::size_t n, std::size_t a, std::size_t fan_in) {
    check_ghz_params(n, a);
    if (fan_in < 2) throw ValidationError("fan-in must be at least 2");
    const std::size_t num_blocks = (n + a - 1) / a;
    const std::size_t num_ancillas = num_blocks - 1;
    AdaptiveCircuit c(n + num_ancillas, num_ancillas);

    std::vector<std::vector<std::size_t>> blocks(num_blocks);
    for (std::size_t q = 0; q < n; ++q) blocks[q / a].push_back(q);
    auto ancilla = [n](std::size_t j) { return n + j; };

    Layer hadamards;
    for (const auto& block : blocks) hadamards.push_back(Operation::make_gate(GateKind::H, {block.front()}));
    c.add_layer(std::move(hadamards));

    std::vector<Layer> fanout;
    for (const auto& block : blocks) {
        auto layers = fanout_layers(block, fan_in);
        if (layers.size() > fanout.size()) fanout.resize(layers.size());
        for (std::size_t l = 0; l < layers.size(); ++l) {
            fanout[l].insert(fanout[l].end(), layers[l].begin(), layers[l].end());
        }
    }

    if (num_ancillas > 0) {
        Layer left;
        Layer right;
        Layer measure;
        for (std::size_t j = 0; j < num_ancillas; ++j) {
            left.push_back(Operation::make_gate(GateKind::CNOT, {blocks[j].front(), ancilla(j)}));
            right.push_back(Operation::make_gate(GateKind::CNOT, {blocks[j + 1].front(), ancilla(j)}));
            measure.push_back(Operation::make_measure(ancilla(j), j));
        }
        c.add_layer(std::move(left));
        c.add_layer(std::move(right));
        // Ancilla readout runs alongside the first fan-out layer.
        if (!fanout.empty()) {
            measure.insert(measure.end(), fanout.front().begin(), fanout.front().end());
            fanout.erase(fanout.begin());
        }
        c.add_layer(std::move(measure));
    }
    for (auto& layer : fanout) c.add_layer(std::move(layer));
    if (num_ancillas > 0) c.add_layer(prefix_corrections(blocks));
    return c;
}

AdaptiveCircuit ghz_adaptive_line(std::size_t n, std::size_t a) {
    check_ghz_params(n, a);
    const std::size_t num_blocks = (n + a - 1) / a;
    const std::size_t m = n + num_blocks - 1;
    AdaptiveCircuit c(m, num_blocks - 1);

    // Line positions: block 0, ancilla 0, block 1, ancilla 1, ...
    std::vector<std::vector<std::size_t>> blocks(num_blocks);
    std::vector<std::size_t> ancillas;
    std::size_t pos = 0;
    for (std::size_t j = 0; j < num_blocks; ++j) {
        const std::size_t size = std::min(a, n - j * a);
        for (std::size_t i = 0; i < size; ++i) blocks[j].push_back(pos++);
        if (j + 1 < num_blocks) ancillas.push_back(pos++);
    }

    Layer hadamards;
    std::vector<std::size_t> lo(num_blocks);
    std::vector<std::size_t> hi(num_blocks);
    for (std::size_t j = 0; j < num_blocks; ++j) {
        const std::size_t centre = blocks[j][(blocks[j].size() - 1) / 2];
        lo[j] = hi[j] = centre;
        hadamards.push_back(Operation::make_gate(GateKind::H, {centre}));
    }
    c.add_layer(std::move(hadamards));

    // Grow each filled interval [lo, hi] by one site per side and layer; the
    // first step only goes right so the two CNOTs never share the centre.
    for (bool first = true;; first = false) {
        Layer layer;
        for (std::size_t j = 0; j < num_blocks; ++j) {
            if (!first && lo[j] > blocks[j].front()) {
                layer.push_back(Operation::make_gate(GateKind::CNOT, {lo[j], lo[j] - 1}));
                --lo[j];
            }
            if (hi[j] < blocks[j].back()) {
                layer.push_back(Operation::make_gate(GateKind::CNOT, {hi[j], hi[j] + 1}));
                ++hi[j];
            } else if (first && lo[j] > blocks[j].front()) {
                layer.push_back(Operation::make_gate(GateKind::CNOT, {lo[j], lo[j] - 1}));
                --lo[j];
            }
        }
        if (layer.empty()) break;
        c.add_layer(std::move(layer));
    }

    if (ancillas.empty()) return c;
    Layer left;
    Layer right;
    Layer measure;
    for (std::size_t j = 0; j < ancillas.size(); ++j) {
        left.push_back(Operation::make_gate(GateKind::CNOT, {blocks[j].back(), ancillas[j]}));
        right.push_back(Operation::make_gate(GateKind::CNOT, {blocks[j + 1].front(), ancillas[j]}));
        measure.push_back(Operation::make_measure(ancillas[j], j));
    }
    c.add_layer(std::move(left));
    c.add_layer(std::move(right));
    c.add_layer(std::move(measure));
    c.add_layer(prefix_corrections(blocks));
    return c;
}

}  // namespace adaptstab
