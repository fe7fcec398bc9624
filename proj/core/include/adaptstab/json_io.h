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

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "adaptstab/bounds.h"
#include "adaptstab/circuit.h"
#include "adaptstab/code.h"
#include "adaptstab/correlation.h"
#include "adaptstab/prep.h"
#include "adaptstab/tableau.h"

namespace adaptstab {

/// Insertion-ordered JSON, so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const StabilizerTableau& t);
/// Accepts {n, generators[, destabilizers]}. Throws ParseError on malformed input.
StabilizerTableau tableau_from_json(const Json& j);

Json to_json(const AdaptiveCircuit& c);
AdaptiveCircuit circuit_from_json(const Json& j);

Json to_json(const StabilizerCode& code);
/// Code file contents: either a JSON object {name, n, checks} or one Pauli
/// string per line with '#' comments.
StabilizerCode code_from_text(std::string_view text, std::string name = "custom");

Json to_json(const MeasurementSchedule& s);
Json to_json(const ResourceProfile& p);
Json to_json(const BoundResult& r);
Json to_json(const CorrelationReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const ValidationReport& r);

/// Parses text as JSON, converting library exceptions to ParseError.
Json parse_json(std::string_view text);

}  // namespace adaptstab
