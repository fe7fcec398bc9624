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

#include "adaptstab/json_io.h"

#include <cctype>
#include <cstdint>
#include <vector>

#include "adaptstab/errors.h"

namespace adaptstab {
namespace {

template <typename T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("field \"") + key + "\": " + e.what());
    }
}

std::vector<PauliOperator> parse_paulis(const std::vector<std::string>& strings) {
    std::vector<PauliOperator> out;
    out.reserve(strings.size());
    for (const auto& s : strings) out.push_back(PauliOperator::parse(s));
    return out;
}

std::vector<std::string> pauli_strings(const std::vector<PauliOperator>& ops) {
    std::vector<std::string> out;
    out.reserve(ops.size());
    for (const auto& p : ops) out.push_back(p.to_string());
    return out;
}

Json operation_to_json(const Operation& op) {
    Json j;
    if (op.is_measure()) {
        j["op"] = "MZ";
        j["qubit"] = op.qubit;
        j["cbit"] = op.cbit;
    } else {
        j["op"] = std::string(gate_name(op.gate.kind));
        j["qubits"] = op.gate.qubits;
        if (op.gate.kind == GateKind::CP) j["pauli"] = std::string(1, to_char(op.gate.letter));
        if (op.condition) j["cond"] = Json{{"bits", op.condition->bits}, {"xor", op.condition->xor_value}};
    }
    if (op.merged) j["merged"] = true;
    return j;
}

Operation operation_from_json(const Json& j) {
    const auto name = field<std::string>(j, "op");
    Operation op;
    if (name == "MZ") {
        op = Operation::make_measure(field<std::size_t>(j, "qubit"), field<std::size_t>(j, "cbit"));
    } else {
        GateKind kind;
        try {
            kind = parse_gate_kind(name);
        } catch (const ValidationError& e) {
            throw ParseError(e.what());
        }
        PauliLetter letter = PauliLetter::X;
        if (j.contains("pauli")) {
            const auto text = field<std::string>(j, "pauli");
            if (text.size() != 1) throw ParseError("\"pauli\" must be one of X, Y, Z");
            letter = pauli_letter_from_char(text[0]);
        }
        op = Operation::make_gate(kind, field<std::vector<std::size_t>>(j, "qubits"), letter);
        if (j.contains("cond")) {
            const auto& c = j.at("cond");
            ClassicalCondition cond;
            cond.bits = field<std::vector<std::size_t>>(c, "bits");
            cond.xor_value = c.contains("xor") ? field<int>(c, "xor") : 1;
            if (cond.xor_value != 0 && cond.xor_value != 1) throw ParseError("\"xor\" must be 0 or 1");
            op.condition = std::move(cond);
        }
    }
    if (j.contains("merged")) op.merged = field<bool>(j, "merged");
    return op;
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const StabilizerTableau& t) {
    Json j;
    j["n"] = t.num_qubits();
    j["generators"] = pauli_strings(t.generators());
    j["destabilizers"] = pauli_strings(t.destabilizers());
    return j;
}

StabilizerTableau tableau_from_json(const Json& j) {
    const auto n = field<std::size_t>(j, "n");
    auto gens = parse_paulis(field<std::vector<std::string>>(j, "generators"));
    if (gens.size() != n) throw ParseError("expected " + std::to_string(n) + " generators");
    for (const auto& g : gens) {
        if (g.num_qubits() != n) throw ParseError("generator " + g.to_string() + " has the wrong length");
    }
    try {
        if (j.contains("destabilizers")) {
            return StabilizerTableau::from_rows(std::move(gens),
                                                parse_paulis(field<std::vector<std::string>>(j, "destabilizers")));
        }
        return StabilizerTableau::from_generators(std::move(gens));
    } catch (const ValidationError& e) {
        throw ParseError(std::string("invalid tableau: ") + e.what());
    } catch (const DimensionError& e) {
        throw ParseError(std::string("invalid tableau: ") + e.what());
    }
}

Json to_json(const AdaptiveCircuit& c) {
    Json layers = Json::array();
    for (const auto& layer : c.layers()) {
        Json ops = Json::array();
        for (const auto& op : layer) ops.push_back(operation_to_json(op));
        layers.push_back(std::move(ops));
    }
    Json j;
    j["m"] = c.num_qubits();
    j["cbits"] = c.num_cbits();
    j["layers"] = std::move(layers);
    return j;
}

AdaptiveCircuit circuit_from_json(const Json& j) {
    AdaptiveCircuit c(field<std::size_t>(j, "m"), field<std::size_t>(j, "cbits"));
    const auto& layers = j.at("layers");
    if (!layers.is_array()) throw ParseError("\"layers\" must be an array");
    for (const auto& layer : layers) {
        if (!layer.is_array()) throw ParseError("each layer must be an array");
        Layer ops;
        for (const auto& op : layer) {
            auto parsed = operation_from_json(op);
            for (auto q : parsed.qubits()) {
                if (q >= c.num_qubits()) throw ParseError("qubit " + std::to_string(q) + " is out of range");
            }
            if (parsed.is_measure() && parsed.cbit >= c.num_cbits()) {
                throw ParseError("cbit " + std::to_string(parsed.cbit) + " is out of range");
            }
            if (parsed.condition) {
                for (auto b : parsed.condition->bits) {
                    if (b >= c.num_cbits()) throw ParseError("condition bit " + std::to_string(b) + " is out of range");
                }
            }
            ops.push_back(std::move(parsed));
        }
        c.add_layer(std::move(ops));
    }
    return c;
}

Json to_json(const StabilizerCode& code) {
    Json j;
    j["name"] = code.name();
    j["n"] = code.num_qubits();
    j["checks"] = pauli_strings(code.checks());
    return j;
}

StabilizerCode code_from_text(std::string_view text, std::string name) {
    std::size_t start = 0;
    while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
    if (start == text.size() || text[start] != '{') return parse_code_text(text, std::move(name));
    const Json j = parse_json(text);
    if (j.contains("name")) name = field<std::string>(j, "name");
    const auto checks = field<std::vector<std::string>>(j, "checks");
    auto code = build_code(checks, std::move(name));
    if (j.contains("n") && field<std::size_t>(j, "n") != code.num_qubits()) {
        throw ParseError("\"n\" disagrees with the check length");
    }
    return code;
}

Json to_json(const MeasurementSchedule& s) {
    Json edges = Json::array();
    for (const auto& e : s.edges) {
        edges.push_back(
            Json{{"qubit", e.qubit}, {"check", e.check}, {"pauli", std::string(1, to_char(e.letter))}, {"color", e.color}});
    }
    Json j;
    j["qubits"] = s.num_qubits;
    j["checks"] = s.num_checks;
    j["colors"] = s.num_colors;
    j["edges"] = std::move(edges);
    return j;
}

Json to_json(const ResourceProfile& p) {
    Json j;
    j["n"] = p.n;
    j["m"] = p.m;
    j["ancillas"] = p.ancillas();
    j["fan_in"] = p.fan_in;
    j["depth"] = p.depth;
    j["geometry"] = p.geometry.describe();
    return j;
}

Json to_json(const BoundResult& r) {
    Json j;
    j["check"] = r.check;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["satisfied"] = r.satisfied;
    if (r.warning) j["warning"] = *r.warning;
    if (r.conjectured_lhs) j["conjectured_lhs"] = *r.conjectured_lhs;
    j["profile"] = to_json(r.profile);
    return j;
}

Json to_json(const CorrelationReport& r) {
    Json j;
    j["region"] = r.region;
    j["w"] = r.w;
    j["method"] = std::string(method_name(r.method));
    j["value"] = r.value;
    j["first_region"] = r.first_region;
    j["second_region"] = r.second_region;
    j["first_operator"] = r.pair.first;
    j["second_operator"] = r.pair.second;
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["verified"] = r.verified;
    j["exhaustive"] = r.exhaustive_done;
    j["random_trials"] = r.random_trials;
    j["branches"] = r.branches;
    j["infeasible_branches"] = r.infeasible_branches;
    j["depth"] = r.depth;
    j["ancillas"] = r.ancillas;
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    return j;
}

Json to_json(const ValidationReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) violations.push_back(Json{{"layer", v.layer}, {"message", v.message}});
    Json j;
    j["ok"] = r.ok();
    j["violations"] = std::move(violations);
    return j;
}

}  // namespace adaptstab
