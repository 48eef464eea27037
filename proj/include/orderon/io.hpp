// Copyright 2026 The orderon-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "orderon/csdist.hpp"
#include "orderon/density.hpp"
#include "orderon/generators.hpp"
#include "orderon/graph.hpp"
#include "orderon/grid.hpp"
#include "orderon/hereditary.hpp"
#include "orderon/norms.hpp"
#include "orderon/property.hpp"
#include "orderon/regularity.hpp"
#include "orderon/shift_map.hpp"

// File formats are described in docs/formats.md. Vertices are 1-based in
// files and JSON reports; cells are 0-based.

namespace orderon::io {

using Json = nlohmann::ordered_json;

OrderedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const OrderedGraph& g);
OrderedGraph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const OrderedGraph& g);

Json to_json(const GridOrderon& w);
GridOrderon orderon_from_json(const Json& j);
GridOrderon load_orderon(const std::filesystem::path& path);

Json to_json(const PatternGraph& f);
PatternGraph pattern_from_json(const Json& j);
/// A pattern file is either an edge-list graph or a JSON pattern object.
PatternGraph load_pattern(const std::filesystem::path& path);

/// {"patterns": [pattern, ...]}.
PropertySpec family_from_json(const Json& j);
PropertySpec load_family(const std::filesystem::path& path);

/// {"p": [[...]], "q": [...]} with q optional.
SbmSpec sbm_from_json(const Json& j);

Json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const Json& j);

Json to_json(const Grid& g);
Json to_json(const DensityReport& r);
Json to_json(const NormCertificate& c);
Json to_json(const ShiftMap& f);
Json to_json(const CsUpper& u);
Json to_json(const CsLower& l);
Json to_json(const CsDistanceBounds& b);
Json to_json(const MembershipVerdict& v);
Json to_json(const ThresholdDistance& d);
Json to_json(const TesterVerdict& t);
Json to_json(const EstimationReport& r);
Json to_json(const ClosureCheck& c);
Json to_json(const CellPartition& p);
Json to_json(const FkResult& r);

std::string to_string(Exactness e);

}  // namespace orderon::io
