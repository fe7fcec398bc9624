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

#include "commands.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "adaptstab/bounds.h"
#include "adaptstab/circuit.h"
#include "adaptstab/code.h"
#include "adaptstab/correlation.h"
#include "adaptstab/densesim.h"
#include "adaptstab/errors.h"
#include "adaptstab/metrics.h"
#include "adaptstab/prep.h"
#include "adaptstab/tableau.h"

namespace adaptstab::cli {
namespace {

constexpr std::string_view kBuiltin = "builtin:";
constexpr std::size_t kMaxCorrelationQubits = 16;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

std::size_t parse_size(std::string_view text, std::string_view what) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError("bad " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

struct LoadedCode {
    StabilizerCode code;
    std::string raw;
};

LoadedCode load_code(const std::string& source) {
    if (source.starts_with(kBuiltin)) return {builtin_code(source.substr(kBuiltin.size())), source};
    auto raw = read_file(source);
    return {code_from_text(raw, source), raw};
}

StabilizerTableau ghz_tableau(std::size_t n) {
    auto t = StabilizerTableau::zero_state(n);
    t.h(0);
    for (std::size_t q = 1; q < n; ++q) t.cnot(0, q);
    return t;
}

// builtin:ghzN, builtin:zeroN, builtin:plusN, builtin:<code> (its prepared
// logical state) or a tableau JSON file.
std::pair<StabilizerTableau, std::string> load_tableau(const std::string& source) {
    if (!source.starts_with(kBuiltin)) {
        auto raw = read_file(source);
        return {tableau_from_json(parse_json(raw)), raw};
    }
    const std::string name = source.substr(kBuiltin.size());
    for (std::string_view family : {"ghz", "zero", "plus"}) {
        if (!name.starts_with(family) || name.size() == family.size() ||
            !std::isdigit(static_cast<unsigned char>(name[family.size()]))) {
            continue;
        }
        const std::size_t n = parse_size(std::string_view(name).substr(family.size()), "qubit count");
        if (n == 0) throw ParseError("a state needs at least one qubit");
        if (family == "ghz") return {ghz_tableau(n), source};
        auto t = StabilizerTableau::zero_state(n);
        if (family == "plus") {
            for (std::size_t q = 0; q < n; ++q) t.h(q);
        }
        return {t, source};
    }
    return {prepare_state(builtin_code(name)).target, source};
}

StateVector load_dense(const std::string& family) {
    auto s = make_state(family);
    if (s.num_qubits() > kMaxCorrelationQubits) {
        throw ResourceGuardError("correlation commands are limited to " + std::to_string(kMaxCorrelationQubits) +
                                 " qubits");
    }
    return s;
}

Json bound_json(const std::vector<BoundResult>& results, bool& all_satisfied) {
    Json out = Json::array();
    all_satisfied = true;
    for (const auto& r : results) {
        all_satisfied = all_satisfied && r.satisfied;
        out.push_back(to_json(r));
    }
    return out;
}

// Every check that applies to a circuit preparing `state` on its first n qubits.
std::vector<BoundResult> applicable_bounds(const ResourceProfile& profile, const StabilizerTableau& state) {
    const double wt = static_cast<double>(stabilizer_weight(state));
    std::vector<BoundResult> results{check_adaptive_weight(profile, wt), check_clifford_adaptive(profile, wt)};
    if (profile.ancillas() == 0) results.push_back(check_nonadaptive(profile, wt));
    if (state.num_qubits() <= 10) {
        const auto range = pauli_correlation_range(state_from_tableau(state));
        results.push_back(check_correlation(profile, 1, static_cast<double>(range)));
    }
    if (wt > 1 && is_permutation_invariant(state)) results.push_back(check_permutation_invariant(profile));
    return results;
}

VerificationOptions verification_options(const std::string& mode, std::uint64_t seed, std::size_t threads) {
    VerificationOptions options;
    options.seed = seed;
    options.threads = threads;
    if (mode == "exhaustive") return options;
    options.exhaustive = false;
    options.random_trials = parse_size(mode, "trial count");
    return options;
}

}  // namespace

std::string digest(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(' ');
        const auto last = item.find_last_not_of(' ');
        if (first == std::string::npos) throw ParseError("empty entry in list '" + text + "'");
        out.push_back(parse_size(std::string_view(item).substr(first, last - first + 1), "index"));
    }
    if (out.empty()) throw ParseError("empty index list");
    return out;
}

Geometry parse_geometry(const std::string& text) {
    if (text == "all") return Geometry::all_to_all();
    if (!text.starts_with("grid:")) throw ParseError("geometry must be 'all' or 'grid:R[:AxB...]'");
    std::string_view rest = std::string_view(text).substr(5);
    const auto colon = rest.find(':');
    const std::size_t r = parse_size(rest.substr(0, colon), "grid dimension");
    std::vector<std::size_t> sides;
    if (colon != std::string_view::npos) {
        std::string_view dims = rest.substr(colon + 1);
        while (!dims.empty()) {
            const auto x = dims.find('x');
            sides.push_back(parse_size(dims.substr(0, x), "grid side"));
            dims = x == std::string_view::npos ? std::string_view{} : dims.substr(x + 1);
        }
    }
    return Geometry::grid(r, std::move(sides));
}

CommandResult run_prep(const PrepArgs& args) {
    auto [code, raw] = load_code(args.code);
    CommandResult result;
    result.inputs = raw;
    PreparationPlan plan;
    if (args.partition == "auto") {
        plan = prepare_state(code);
    } else {
        // {"measured": [...], "fixed": [...], "initial": circuit JSON (default |+>^n)}
        const auto text = read_file(args.partition);
        result.inputs += text;
        const auto j = parse_json(text);
        auto paulis = [&](const char* key) {
            std::vector<PauliOperator> out;
            if (!j.contains(key)) return out;
            for (const auto& s : j.at(key)) out.push_back(PauliOperator::parse(s.get<std::string>()));
            return out;
        };
        AdaptiveCircuit initial(code.num_qubits());
        if (j.contains("initial")) {
            initial = circuit_from_json(j.at("initial"));
        } else {
            Layer hadamards;
            for (std::size_t q = 0; q < code.num_qubits(); ++q) hadamards.push_back(Operation::make_gate(GateKind::H, {q}));
            initial.add_layer(std::move(hadamards));
        }
        auto measured = paulis("measured");
        if (measured.empty()) measured = code.checks();
        plan = prepare_state_explicit(measured, paulis("fixed"), initial);
    }
    const auto report = verify_preparation(plan.circuit, plan.target,
                                           verification_options(args.verify, args.seed, args.threads));
    const auto circuit_json = to_json(plan.circuit);
    if (args.out) write_file(*args.out, circuit_json.dump(2) + "\n");

    const auto profile = profile_circuit(plan.circuit, code.num_qubits());
    bool bounds_ok = false;
    Json bounds = bound_json({check_clifford_adaptive(profile, static_cast<double>(stabilizer_weight(plan.target)))},
                             bounds_ok);
    result.results["code"] = to_json(code);
    result.results["measured"] = Json::array();
    for (const auto& p : plan.measured) result.results["measured"].push_back(p.to_string());
    result.results["fixed"] = Json::array();
    for (const auto& p : plan.fixed) result.results["fixed"].push_back(p.to_string());
    result.results["target"] = to_json(plan.target);
    result.results["sparsity"] = plan.sparsity;
    result.results["depth_bound"] = 2 + plan.sparsity + plan.sparsity * plan.sparsity;
    result.results["tangled_pairs"] = plan.fragment.tangled.size();
    result.results["verification"] = to_json(report);
    result.results["bounds"] = std::move(bounds);
    if (!args.out) result.results["circuit"] = circuit_json;
    std::ostringstream summary;
    summary << code.name() << ": depth " << report.depth << ", ancillas " << report.ancillas << ", "
            << (report.verified ? "verified" : "NOT verified") << " (" << report.branches << " branches";
    if (report.exhaustive_done) summary << ", exhaustive";
    summary << ")";
    if (report.counterexample) summary << "; counterexample: " << *report.counterexample;
    result.summary = summary.str();
    result.exit_code = report.verified && bounds_ok ? kOk : kVerificationFailed;
    return result;
}

CommandResult run_weight(const WeightArgs& args) {
    auto [state, raw] = load_tableau(args.state);
    const auto minimal = min_weight_generators(state);
    CommandResult result;
    result.inputs = raw;
    result.results["n"] = state.num_qubits();
    result.results["stabilizer_weight"] = minimal.weights.empty() ? 0 : minimal.weights.front();
    result.results["weight_vector"] = minimal.weights;
    result.results["generators"] = Json::array();
    for (const auto& g : minimal.generators) result.results["generators"].push_back(g.to_string());
    result.summary = "wt_s = " + std::to_string(minimal.weights.front());
    if (args.oracle) {
        bool agree = true;
        std::vector<std::size_t> oracle;
        for (std::size_t k = 1; k <= state.num_qubits(); ++k) {
            oracle.push_back(weight_vector_oracle(state, k));
            agree = agree && oracle.back() == minimal.weights[k - 1];
        }
        result.results["oracle_weight_vector"] = oracle;
        result.results["oracle_agrees"] = agree;
        result.summary += agree ? " (oracle agrees)" : " (oracle DISAGREES)";
        if (!agree) result.exit_code = kVerificationFailed;
    }
    return result;
}

CommandResult run_cor(const CorArgs& args) {
    const auto state = load_dense(args.family);
    const std::size_t n = state.num_qubits();
    CommandResult result;
    result.inputs = args.family;
    result.results["family"] = args.family;
    if (args.ops) {
        // A single pair, e.g. --ops X,X --sites 0,3 (sites default to the ends).
        const auto comma = args.ops->find(',');
        if (comma == std::string::npos) throw ParseError("--ops needs two Pauli strings like X,X");
        const std::string first = args.ops->substr(0, comma);
        const std::string second = args.ops->substr(comma + 1);
        std::vector<std::size_t> sites;
        if (args.sites) {
            sites = parse_index_list(*args.sites);
        } else {
            for (std::size_t q = 0; q < first.size(); ++q) sites.push_back(q);
            for (std::size_t q = 0; q < second.size(); ++q) sites.push_back(n - second.size() + q);
        }
        if (sites.size() != first.size() + second.size()) throw ParseError("--sites must list one qubit per letter");
        for (auto q : sites) {
            if (q >= n) throw ParseError("site " + std::to_string(q) + " is out of range");
        }
        const std::vector<std::size_t> a(sites.begin(), sites.begin() + static_cast<long>(first.size()));
        const std::vector<std::size_t> b(sites.begin() + static_cast<long>(first.size()), sites.end());
        const double value = correlation(state, SupportedOperator::pauli_on(a, first), SupportedOperator::pauli_on(b, second));
        result.results["ops"] = {first, second};
        result.results["sites"] = {a, b};
        result.results["value"] = value;
        result.summary = "Cor = " + std::to_string(value);
        return result;
    }
    std::vector<std::size_t> region;
    if (args.region) {
        region = parse_index_list(*args.region);
        for (auto q : region) {
            if (q >= n) throw ParseError("region qubit " + std::to_string(q) + " is out of range");
        }
    } else {
        for (std::size_t q = 0; q < n; ++q) region.push_back(q);
    }
    CorrelationOptions options;
    options.seed = args.seed;
    const auto report = correlation_strength_w(state, region, args.w, parse_method(args.method), options);
    result.results["report"] = to_json(report);
    result.results["value"] = report.value;
    result.summary = "Cor_" + std::to_string(args.w) + " (" + args.method + ") = " + std::to_string(report.value);
    return result;
}

CommandResult run_crange(const CrangeArgs& args) {
    const auto state = load_dense(args.family);
    CorrelationOptions options;
    options.seed = args.seed;
    const auto range = correlation_range_w(state, args.w, args.delta, parse_method(args.method), options);
    CommandResult result;
    result.inputs = args.family;
    result.results["family"] = args.family;
    result.results["w"] = args.w;
    result.results["delta"] = args.delta;
    result.results["method"] = args.method;
    result.results["correlation_range"] = range;
    result.summary = "CR_" + std::to_string(args.w) + " = " + std::to_string(range);
    return result;
}

CommandResult run_bounds(const BoundsArgs& args) {
    const auto circuit_text = read_file(args.circuit);
    const auto circuit = circuit_from_json(parse_json(circuit_text));
    auto [target, raw] = load_tableau(args.target);
    CommandResult result;
    result.inputs = circuit_text + raw;
    VerificationOptions options;
    options.seed = args.seed;
    const auto report = verify_preparation(circuit, target, options);
    const auto geometry = parse_geometry(args.geometry);
    const auto profile = profile_circuit(circuit, target.num_qubits(), args.fan_in, geometry);
    bool all_ok = false;
    result.results["geometry"] = geometry.describe();
    result.results["profile"] = to_json(profile);
    result.results["verification"] = to_json(report);
    result.results["checks"] = bound_json(applicable_bounds(profile, target), all_ok);
    result.summary = std::string(report.verified ? "circuit prepares the target" : "circuit does NOT prepare the target") +
                     "; bounds " + (all_ok ? "all satisfied" : "VIOLATED");
    result.exit_code = report.verified && all_ok ? kOk : kVerificationFailed;
    return result;
}

CommandResult run_ghz_demo(const GhzArgs& args) {
    if (args.line && args.k != 2) throw ParseError("the line variant uses K = 2");
    const auto circuit = args.line ? ghz_adaptive_line(args.n, args.a) : ghz_adaptive(args.n, args.a, args.k);
    const auto target = ghz_tableau(args.n);
    VerificationOptions options;
    options.seed = args.seed;
    const auto report = verify_preparation(circuit, target, options);
    const auto geometry = args.line ? Geometry::grid(1) : Geometry::all_to_all();
    const auto profile = profile_circuit(circuit, args.n, args.k, geometry);
    const std::size_t fanout = ghz_fanout_depth(args.a, args.k);
    const double saturation = static_cast<double>(profile.ancillas() + 1) * g_value(args.k, fanout) /
                              static_cast<double>(args.n);
    bool all_ok = false;
    const auto circuit_json = to_json(circuit);
    if (args.out) write_file(*args.out, circuit_json.dump(2) + "\n");
    CommandResult result;
    result.inputs = std::to_string(args.n) + "," + std::to_string(args.a) + "," + std::to_string(args.k) +
                    (args.line ? ",line" : "");
    result.results["n"] = args.n;
    result.results["a"] = args.a;
    result.results["k"] = args.k;
    result.results["line"] = args.line;
    result.results["ancillas"] = profile.ancillas();
    result.results["depth"] = depth(circuit);
    result.results["fanout_depth"] = fanout;
    result.results["saturation_ratio"] = saturation;
    result.results["verification"] = to_json(report);
    result.results["checks"] = bound_json(applicable_bounds(profile, target), all_ok);
    if (!args.out) result.results["circuit"] = circuit_json;
    result.summary = "GHZ_" + std::to_string(args.n) + ": ancillas " + std::to_string(profile.ancillas()) + ", depth " +
                     std::to_string(depth(circuit)) + ", " + (report.verified ? "verified" : "NOT verified");
    result.exit_code = report.verified && all_ok ? kOk : kVerificationFailed;
    return result;
}

CommandResult run_antishallow(const AntishallowArgs& args) {
    const auto state = load_dense(args.family);
    const std::size_t n = state.num_qubits();
    ProductSearchOptions search;
    search.enabled = args.search;
    search.seed = args.seed;
    const auto global = global_correlation(state);
    const double lower = anti_shallowness_lower_from(global.pauli.value);
    const double upper =
        anti_shallowness_upper(state, {basis_state(std::string(n, '0')), plus_state(n)}, search);
    CommandResult result;
    result.inputs = args.family;
    result.results["family"] = args.family;
    result.results["correlation"] = global.pauli.value;
    result.results["lower"] = lower;
    result.results["upper"] = upper;
    result.results["product_search"] = args.search;
    result.summary = "anti-shallowness in [" + std::to_string(lower) + ", " + std::to_string(upper) + "]";
    return result;
}

CommandResult run_lightcone(const LightconeArgs& args) {
    const auto text = read_file(args.circuit);
    const auto circuit = circuit_from_json(parse_json(text));
    const auto list = parse_index_list(args.from);
    const std::set<std::size_t> region(list.begin(), list.end());
    for (auto q : region) {
        if (q >= circuit.num_qubits()) throw ParseError("qubit " + std::to_string(q) + " is out of range");
    }
    const auto cone = args.backward ? backward_lightcone(circuit, region) : forward_lightcone(circuit, region, args.layer);
    const std::size_t fan_in = std::max<std::size_t>(2, max_fan_in(circuit));
    const std::size_t layers = args.backward ? depth(circuit) : depth(circuit) - std::min(depth(circuit), args.layer);
    const double bound = static_cast<double>(region.size()) * g_value(fan_in, layers);
    CommandResult result;
    result.inputs = text + args.from;
    result.results["direction"] = args.backward ? "backward" : "forward";
    result.results["region"] = list;
    result.results["cone"] = std::vector<std::size_t>(cone.begin(), cone.end());
    result.results["size"] = cone.size();
    result.results["g_bound"] = bound;
    result.results["within_bound"] = static_cast<double>(cone.size()) <= bound;
    result.summary = "lightcone size " + std::to_string(cone.size()) + " (bound " + std::to_string(bound) + ")";
    return result;
}

}  // namespace adaptstab::cli
