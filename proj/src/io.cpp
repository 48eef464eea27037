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

#include "orderon/io.hpp"

#include <fstream>
#include <sstream>

#include "orderon/error.hpp"

namespace orderon::io {
namespace {

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out(v);
  for (int& x : out) ++x;
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path.string());
  return in;
}

Json rect(const Rect& r) { return Json::array({r.x0, r.x1, r.a0, r.a1}); }

}  // namespace

OrderedGraph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    if (n < 0) {
      if (first.rfind("n=", 0) != 0) throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected n=<int>");
      try {
        std::size_t used = 0;
        n = std::stoi(first.substr(2), &used);
        if (used != first.size() - 2) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": bad vertex count");
      }
      if (n < 1) throw Error(ErrorCode::kParse, "vertex count must be >= 1");
      continue;
    }
    int i = 0, j = 0;
    std::string rest;
    std::istringstream pair(line);
    if (!(pair >> i >> j) || (pair >> rest)) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected 'i j'");
    }
    if (i < 1 || j > n || i >= j) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": need 1 <= i < j <= n");
    }
    edges.emplace_back(i - 1, j - 1);
  }
  if (n < 0) throw Error(ErrorCode::kParse, "missing n=<int> header");
  return OrderedGraph::from_edges(n, edges);
}

void write_graph(std::ostream& out, const OrderedGraph& g) {
  out << "n=" << g.size() << '\n';
  for (const auto& [i, j] : g.edges()) out << i + 1 << ' ' << j + 1 << '\n';
}

OrderedGraph load_graph(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_graph(in);
}

void save_graph(const std::filesystem::path& path, const OrderedGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path.string());
  write_graph(out, g);
}

Json to_json(const GridOrderon& w) {
  const Grid& g = w.grid();
  Json layers = Json::array();
  for (int c = 0; c < g.num_columns(); ++c) {
    const auto l = g.layers(c);
    layers.push_back(std::vector<double>(l.begin(), l.end()));
  }
  Json values = Json::array();
  for (int i = 0; i < w.num_cells(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < w.num_cells(); ++j) row.push_back(w.value(i, j));
    values.push_back(std::move(row));
  }
  return Json{{"xcuts", std::vector<double>(g.xcuts().begin(), g.xcuts().end())},
              {"layers", std::move(layers)},
              {"values", std::move(values)}};
}

GridOrderon orderon_from_json(const Json& j) {
  try {
    auto xcuts = j.at("xcuts").get<std::vector<double>>();
    std::vector<std::vector<double>> layers;
    if (j.contains("layers")) {
      layers = j.at("layers").get<std::vector<std::vector<double>>>();
    } else {
      layers.assign(xcuts.size() - 1, {0.0, 1.0});
    }
    const auto values = j.at("values").get<std::vector<std::vector<double>>>();
    return build_grid_orderon(std::move(xcuts), std::move(layers), values);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("orderon JSON: ") + e.what());
  }
}

Json load_json(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

void save_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

GridOrderon load_orderon(const std::filesystem::path& path) { return orderon_from_json(load_json(path)); }

Json to_json(const PatternGraph& f) {
  Json edges = Json::array();
  for (const auto& [i, j] : f.edges()) edges.push_back({i + 1, j + 1});
  return Json{{"k", f.size()}, {"edges", std::move(edges)}};
}

PatternGraph pattern_from_json(const Json& j) {
  try {
    const int k = j.at("k").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.value("edges", Json::array())) {
      edges.emplace_back(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
    }
    return PatternGraph::from_edges(k, edges);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("pattern JSON: ") + e.what());
  }
}

PatternGraph load_pattern(const std::filesystem::path& path) {
  auto in = open_in(path);
  const int first = (in >> std::ws).peek();
  if (first == '{') return pattern_from_json(load_json(path));
  return PatternGraph::from_graph(read_graph(in));
}

PropertySpec family_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "threshold") return PropertySpec::threshold();
  std::vector<PatternGraph> family;
  try {
    for (const auto& p : j.at("patterns")) family.push_back(pattern_from_json(p));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("family JSON: ") + e.what());
  }
  return PropertySpec::forbidden(std::move(family));
}

PropertySpec load_family(const std::filesystem::path& path) { return family_from_json(load_json(path)); }

SbmSpec sbm_from_json(const Json& j) {
  try {
    auto p = j.at("p").get<std::vector<std::vector<double>>>();
    std::vector<double> q;
    if (j.contains("q")) q = j.at("q").get<std::vector<double>>();
    return SbmSpec(std::move(p), std::move(q));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("SBM JSON: ") + e.what());
  }
}

std::string to_string(Exactness e) {
  switch (e) {
    case Exactness::kExact:
      return "exact";
    case Exactness::kLowerBound:
      return "lower_bound";
    case Exactness::kUpperBound:
      return "upper_bound";
  }
  return "unknown";
}

Json to_json(const Grid& g) {
  Json layers = Json::array();
  for (int c = 0; c < g.num_columns(); ++c) {
    const auto l = g.layers(c);
    layers.push_back(std::vector<double>(l.begin(), l.end()));
  }
  return Json{{"xcuts", std::vector<double>(g.xcuts().begin(), g.xcuts().end())}, {"layers", std::move(layers)}};
}

Json to_json(const DensityReport& r) {
  return Json{{"value", r.value},
              {"method", r.method == DensityMethod::kExact ? "exact" : "monte_carlo"},
              {"trials", r.trials},
              {"stderr", r.std_error}};
}

Json to_json(const NormCertificate& c) {
  return Json{{"value", c.value},     {"exactness", to_string(c.exactness)},
              {"ordered", c.ordered}, {"depth", c.depth},
              {"witness_S", c.witness_s}, {"witness_T", c.witness_t},
              {"grid", to_json(c.grid)}};
}

Json to_json(const ShiftMap& f) {
  Json pieces = Json::array();
  for (const ShiftPiece& p : f.pieces()) pieces.push_back({{"src", rect(p.src)}, {"dst", rect(p.dst)}});
  return Json{{"resolution", f.resolution()},
              {"colperm", f.colperm()},
              {"shift_cost", f.shift_cost()},
              {"pieces", std::move(pieces)}};
}

Json to_json(const CsUpper& u) {
  return Json{{"value", u.value},
              {"shift_cost", u.shift_cost},
              {"norm", u.norm},
              {"norm_exactness", to_string(u.norm_exactness)},
              {"candidates", u.candidates},
              {"witness", to_json(u.witness)}};
}

Json to_json(const CsLower& l) {
  return Json{{"value", l.value}, {"delta_t", l.delta_t}, {"witness", to_json(l.witness)}};
}

Json to_json(const CsDistanceBounds& b) { return Json{{"upper", to_json(b.upper)}, {"lower", to_json(b.lower)}}; }

Json to_json(const MembershipVerdict& v) {
  Json j{{"member", v.member}, {"witness", one_based(v.witness)}};
  if (v.threshold >= 0) j["threshold"] = v.threshold;
  if (v.pattern >= 0) j["pattern"] = v.pattern;
  return j;
}

Json to_json(const ThresholdDistance& d) {
  return Json{{"distance", d.distance}, {"threshold", d.threshold}, {"edits", d.edits}};
}

Json to_json(const TesterVerdict& t) {
  return Json{{"accepted", t.accepted}, {"sample", one_based(t.sample)}, {"verdict", to_json(t.verdict)}};
}

Json to_json(const EstimationReport& r) {
  Json q = Json::object();
  for (const auto& [level, value] : r.quantiles) {
    std::ostringstream key;
    key << level;
    q[key.str()] = value;
  }
  return Json{{"k", r.k},         {"trials", r.trials},         {"full_value", r.full_value},
              {"mean", r.mean},   {"quantiles", std::move(q)}, {"deviations", r.deviations}};
}

Json to_json(const ClosureCheck& c) {
  Json j{{"holds", c.holds}, {"max_density", c.max_density}};
  if (c.witness) j["witness"] = to_json(*c.witness);
  return j;
}

Json to_json(const CellPartition& p) { return Json{{"num_cells", p.num_cells()}, {"blocks", p.blocks()}}; }

Json to_json(const FkResult& r) {
  return Json{{"residual", r.residual},
              {"exactness", to_string(r.exactness)},
              {"rounds", r.rounds},
              {"cap", r.cap},
              {"num_blocks", r.partition.num_blocks()},
              {"history", r.history},
              {"partition", to_json(r.partition)}};
}

}  // namespace orderon::io
