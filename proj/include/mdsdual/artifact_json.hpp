/*
   Copyright 2026 The mdsdual Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MDSDUAL_ARTIFACT_JSON_HPP
#define MDSDUAL_ARTIFACT_JSON_HPP

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mdsdual/census.hpp"
#include "mdsdual/constructions.hpp"
#include "mdsdual/error.hpp"
#include "mdsdual/verify.hpp"

namespace mdsdual {

using Json = nlohmann::ordered_json;

Json params_to_json(const ConstructionParams& params);
Json trace_to_json(const ConstructionTrace& trace);

/// Timing is left out so that equal inputs give byte-identical output.
Json report_to_json(const VerificationReport& report);

Json artifact_to_json(const CodeArtifact& art, const std::optional<Construction>& origin,
                      const std::optional<VerificationReport>& report);

/// Rebuilds the field from (p, d), checks the stored modulus and generator
/// against it and reads a, v and G. Any inconsistency raises MalformedInput.
CodeArtifact artifact_from_json(const Json& j);
CodeArtifact artifact_from_text(std::string_view text);

Json census_to_json(const CensusReport& report, RuleSource rows, bool all_rows);

Json error_to_json(const Error& err);

/// Compact dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace mdsdual

#endif  // MDSDUAL_ARTIFACT_JSON_HPP
