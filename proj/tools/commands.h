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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adaptstab/json_io.h"

namespace adaptstab::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationFailed = 2, kResourceGuard = 3 };

/// What a command hands back to main: the JSON results, the raw inputs that
/// feed the digest, a one-line human summary and the exit code.
struct CommandResult {
    Json results;
    std::string inputs;
    std::string summary;
    int exit_code = kOk;
};

struct PrepArgs {
    std::string code;
    std::string partition = "auto";
    std::string verify = "exhaustive";
    std::optional<std::string> out;
    std::uint64_t seed = 1;
    std::size_t threads = 0;
};

struct WeightArgs {
    std::string state;
    bool oracle = false;
};

struct CorArgs {
    std::string family;
    std::size_t w = 1;
    std::optional<std::string> region;
    std::string method = "pauli";
    std::optional<std::string> ops;
    std::optional<std::string> sites;
    std::uint64_t seed = 7;
};

struct CrangeArgs {
    std::string family;
    std::size_t w = 1;
    double delta = 1e-9;
    std::string method = "pauli";
    std::uint64_t seed = 7;
};

struct BoundsArgs {
    std::string circuit;
    std::string target;
    std::string geometry = "all";
    std::optional<std::size_t> fan_in;
    std::uint64_t seed = 1;
};

struct GhzArgs {
    std::size_t n = 8;
    std::size_t a = 2;
    std::size_t k = 2;
    bool line = false;
    std::optional<std::string> out;
    std::uint64_t seed = 1;
};

struct AntishallowArgs {
    std::string family;
    bool search = false;
    std::uint64_t seed = 11;
};

struct LightconeArgs {
    std::string circuit;
    std::string from;
    bool backward = false;
    std::size_t layer = 0;
};

CommandResult run_prep(const PrepArgs& args);
CommandResult run_weight(const WeightArgs& args);
CommandResult run_cor(const CorArgs& args);
CommandResult run_crange(const CrangeArgs& args);
CommandResult run_bounds(const BoundsArgs& args);
CommandResult run_ghz_demo(const GhzArgs& args);
CommandResult run_antishallow(const AntishallowArgs& args);
CommandResult run_lightcone(const LightconeArgs& args);

/// FNV-1a over the raw inputs, as 16 hex digits.
std::string digest(const std::string& text);

std::vector<std::size_t> parse_index_list(const std::string& text);
Geometry parse_geometry(const std::string& text);

}  // namespace adaptstab::cli
