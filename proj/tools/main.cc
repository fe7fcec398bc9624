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

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include <CLI/CLI.hpp>

#include "adaptstab/errors.h"
#include "commands.h"

namespace {

using adaptstab::cli::CommandResult;

std::string command_line(int argc, char** argv) {
    std::string out;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) out += ' ';
        out += argv[i];
    }
    return out;
}

int emit(const CommandResult& result, const std::string& command, bool timing, double millis) {
    adaptstab::Json report;
    report["command"] = command;
    report["inputs_digest"] = adaptstab::cli::digest(result.inputs);
    report["results"] = result.results;
    if (timing) report["timing_ms"] = millis;
    std::cout << report.dump(2) << '\n';
    if (!result.summary.empty()) std::cerr << result.summary << '\n';
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    namespace cli = adaptstab::cli;
    CLI::App app{"Adaptive stabilizer-state preparation toolkit"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "Add wall-clock time to the report (breaks reproducibility)");

    std::function<CommandResult()> action;

    cli::PrepArgs prep;
    auto* prep_cmd = app.add_subcommand("prep", "Compile and verify a logical-state preparation circuit");
    prep_cmd->add_option("code", prep.code, "Code file (one Pauli check per line, or JSON) or builtin:NAME")->required();
    prep_cmd->add_option("--partition", prep.partition, "auto, or a JSON file with measured/fixed/initial");
    prep_cmd->add_option("--verify", prep.verify, "exhaustive, or a number of random trials");
    prep_cmd->add_option("--out", prep.out, "Write the circuit JSON here instead of into the report");
    prep_cmd->add_option("--seed", prep.seed, "Seed for random trials");
    prep_cmd->add_option("--threads", prep.threads, "Verification workers (0: all cores)");
    prep_cmd->callback([&] { action = [&] { return cli::run_prep(prep); }; });

    cli::WeightArgs weight;
    auto* weight_cmd = app.add_subcommand("weight", "Stabilizer weight of a state");
    weight_cmd->add_option("state", weight.state, "Tableau JSON or builtin:ghzN|zeroN|plusN|<code>")->required();
    weight_cmd->add_flag("--oracle", weight.oracle, "Cross-check with the rank-threshold oracle");
    weight_cmd->callback([&] { action = [&] { return cli::run_weight(weight); }; });

    cli::CorArgs cor;
    auto* cor_cmd = app.add_subcommand("cor", "Correlation strength of a dense state");
    cor_cmd->add_option("family", cor.family, "ghz:N, w:N, dicke:N,K, hypergraph:N, plus:N or basis:BITS")->required();
    cor_cmd->add_option("--w", cor.w, "Subset size");
    cor_cmd->add_option("--region", cor.region, "Comma-separated qubits (default: all)");
    cor_cmd->add_option("--method", cor.method, "pauli or alt")->check(CLI::IsMember({"pauli", "alt"}));
    cor_cmd->add_option("--ops", cor.ops, "Evaluate one pair of Pauli strings, e.g. X,X");
    cor_cmd->add_option("--sites", cor.sites, "Qubits for --ops, one per letter");
    cor_cmd->add_option("--seed", cor.seed, "Seed for the alternating method");
    cor_cmd->callback([&] { action = [&] { return cli::run_cor(cor); }; });

    cli::CrangeArgs crange;
    auto* crange_cmd = app.add_subcommand("crange", "Correlation range of a dense state");
    crange_cmd->add_option("family", crange.family, "State family as for cor")->required();
    crange_cmd->add_option("--w", crange.w, "Subset size");
    crange_cmd->add_option("--delta", crange.delta, "Correlation threshold");
    crange_cmd->add_option("--method", crange.method, "pauli or alt")->check(CLI::IsMember({"pauli", "alt"}));
    crange_cmd->add_option("--seed", crange.seed, "Seed for the alternating method");
    crange_cmd->callback([&] { action = [&] { return cli::run_crange(crange); }; });

    cli::BoundsArgs bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "Check the depth/ancilla trade-off bounds for a circuit");
    bounds_cmd->add_option("--circuit", bounds.circuit, "Circuit JSON")->required();
    bounds_cmd->add_option("--target", bounds.target, "Target tableau JSON or builtin state")->required();
    bounds_cmd->add_option("--geometry", bounds.geometry, "all or grid:R[:AxB...]");
    bounds_cmd->add_option("--fan-in", bounds.fan_in, "Fan-in K (default: largest gate)");
    bounds_cmd->add_option("--seed", bounds.seed, "Seed for random trials");
    bounds_cmd->callback([&] { action = [&] { return cli::run_bounds(bounds); }; });

    cli::GhzArgs ghz;
    auto* ghz_cmd = app.add_subcommand("ghz-demo", "Build and verify the adaptive GHZ circuit");
    ghz_cmd->add_option("--n", ghz.n, "Qubits")->check(CLI::PositiveNumber);
    ghz_cmd->add_option("--a", ghz.a, "Block size")->check(CLI::PositiveNumber);
    ghz_cmd->add_option("--k", ghz.k, "Fan-in")->check(CLI::Range(2, 64));
    ghz_cmd->add_flag("--line", ghz.line, "Nearest-neighbour variant on a line");
    ghz_cmd->add_option("--out", ghz.out, "Write the circuit JSON here instead of into the report");
    ghz_cmd->add_option("--seed", ghz.seed, "Seed for random trials");
    ghz_cmd->callback([&] { action = [&] { return cli::run_ghz_demo(ghz); }; });

    cli::AntishallowArgs anti;
    auto* anti_cmd = app.add_subcommand("antishallow", "Anti-shallowness interval of a dense state");
    anti_cmd->add_option("family", anti.family, "State family as for cor")->required();
    anti_cmd->add_flag("--search", anti.search, "Also search product states for the upper bound");
    anti_cmd->add_option("--seed", anti.seed, "Seed for the product search");
    anti_cmd->callback([&] { action = [&] { return cli::run_antishallow(anti); }; });

    cli::LightconeArgs cone;
    auto* cone_cmd = app.add_subcommand("lightcone", "Forward or backward lightcone of a qubit set");
    cone_cmd->add_option("--circuit", cone.circuit, "Circuit JSON")->required();
    cone_cmd->add_option("--from", cone.from, "Comma-separated qubits")->required();
    cone_cmd->add_flag("--backward", cone.backward, "Backward cone from the end of the circuit");
    cone_cmd->add_option("--layer", cone.layer, "First layer of a forward cone");
    cone_cmd->callback([&] { action = [&] { return cli::run_lightcone(cone); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kOk : cli::kUsage;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        const auto result = action();
        const double millis =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return emit(result, command_line(argc, argv), timing, millis);
    } catch (const adaptstab::ResourceGuardError& e) {
        std::cerr << "resource guard: " << e.what() << '\n';
        return cli::kResourceGuard;
    } catch (const adaptstab::ContradictionError& e) {
        std::cerr << "verification: " << e.what() << '\n';
        return cli::kVerificationFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kUsage;
    }
}
