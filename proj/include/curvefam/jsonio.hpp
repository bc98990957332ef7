/*
   Copyright 2026 The curvefam authors

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

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "curvefam/families.hpp"

namespace curvefam {

using ordered_json = nlohmann::ordered_json;

/// Parsed job input: the map, its field, and an optional basepoint
/// override that bypasses the analysis step.
struct JobInput {
    RationalMap map;
    std::optional<BaseLocus> basepoints;
};

/// Input schema: {"variables": [...], "map": ["...", ...],
/// "minpoly": "t^2-t+1" (optional), "basepoints": [...] (optional)}.
JobInput parse_job_json(const ordered_json& j);
JobInput load_job_file(const std::string& path);

Field field_from_minpoly_text(const std::string& text);
std::string minpoly_text(const Field& f);

ordered_json divclass_to_json(const DivClass& c);
DivClass divclass_from_json(const ordered_json& j);

ordered_json tree_to_json(const BasepointTree& tree);
BasepointTree tree_from_json(const ordered_json& j, const Field& field);

ordered_json series_to_json(const LinearSeries& s);
ordered_json lattice_to_json(const NSLattice& lat);
ordered_json search_to_json(const FamilySearch& s);

/// Human-readable rendering with the e0-e1-... class notation.
std::string search_to_text(const FamilySearch& s);
std::string lattice_to_text(const NSLattice& lat);

} // namespace curvefam
