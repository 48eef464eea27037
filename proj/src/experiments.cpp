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

#include "orderon/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>

#include "orderon/csdist.hpp"
#include "orderon/density.hpp"
#include "orderon/error.hpp"
#include "orderon/generators.hpp"
#include "orderon/hereditary.hpp"
#include "orderon/parallel.hpp"
#include "orderon/rng.hpp"

#ifndef ORDERON_LAB_VERSION
#define ORDERON_LAB_VERSION "unknown"
#endif

namespace orderon {
namespace {

using io::Json;

template <typename T>
T param(const ExperimentConfig& c, const char* key, T fallback) {
  return c.params.contains(key) ? c.params.at(key).get<T>() : fallback;
}

std::string pattern_label(const PatternGraph& f) {
  std::ostringstream out;
  out << "k=" << f.size() << ':';
  bool first = true;
  for (const auto& [i, j] : f.edges()) {
    out << (first ? "" : ",") << i + 1 << '-' << j + 1;
    first = false;
  }
  if (first) out << "empty";
  return out.str();
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

Check check(std::string name, bool passed, std::string detail) {
  return Check{std::move(name), passed, std::move(detail)};
}

ExperimentReport start(const ExperimentConfig& c) {
  ExperimentReport r;
  r.name = c.name;
  r.config = c.to_json();
  return r;
}

// Clique on the vertex subset `mask`, all other pairs absent.
PatternGraph clique_on(int k, unsigned mask) {
  std::uint32_t edges = 0;
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i)
      if (((mask >> i) & 1u) && ((mask >> j) & 1u)) edges |= 1u << PatternGraph::pair_bit(i, j);
  return PatternGraph(k, edges);
}

}  // namespace

std::string_view library_version() noexcept { return ORDERON_LAB_VERSION; }

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
  ExperimentConfig c;
  try {
    c.name = j.at("name").get<std::string>();
    c.seed = j.value("seed", c.seed);
    c.out_dir = j.value("out", c.out_dir.string());
    c.threads = j.value("threads", c.threads);
    if (j.contains("params")) c.params = j.at("params");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("experiment config: ") + e.what());
  }
  if (std::find(std::begin(kExperimentNames), std::end(kExperimentNames), c.name) == std::end(kExperimentNames)) {
    throw Error(ErrorCode::kBadArgument, "unknown experiment '" + c.name + "'");
  }
  if (c.threads < 1) throw Error(ErrorCode::kBadArgument, "threads must be >= 1");
  return c;
}

Json ExperimentConfig::to_json() const {
  return Json{{"name", name}, {"seed", seed}, {"out", out_dir.string()}, {"threads", threads}, {"params", params}};
}

bool ExperimentReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Json ExperimentReport::manifest() const {
  Json tables_json = Json::array();
  for (const Table& t : tables) {
    tables_json.push_back({{"name", t.name}, {"file", name + "_" + t.name + ".csv"}, {"rows", t.rows.size()}});
  }
  Json checks_json = Json::array();
  for (const Check& c : checks) checks_json.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"experiment", name},
              {"version", std::string(library_version())},
              {"config", config},
              {"passed", passed()},
              {"checks", std::move(checks_json)},
              {"tables", std::move(tables_json)}};
}

std::string to_csv(const Table& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "");
      if (row[i].is_string()) {
        out << '"' << row[i].get<std::string>() << '"';
      } else {
        out << row[i].dump();
      }
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::filesystem::path> write_report(const ExperimentReport& report, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  for (const Table& t : report.tables) {
    const auto path = out_dir / (report.name + "_" + t.name + ".csv");
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::kParse, "cannot write " + path.string());
    out << to_csv(t);
    written.push_back(path);
  }
  const auto manifest = out_dir / (report.name + ".json");
  io::save_json(manifest, report.manifest());
  written.push_back(manifest);
  return written;
}

double median(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorCode::kBadArgument, "median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

ExperimentReport run_odd_clique(const ExperimentConfig& c) {
  ExperimentReport r = start(c);
  const auto sizes = param<std::vector<int>>(c, "sizes", {4, 8, 16, 32, 64});
  const auto ks = param<std::vector<int>>(c, "ks", {2, 3, 4});
  const int reference = param<int>(c, "reference_size", 64);
  const double tolerance = param<double>(c, "tolerance", 0.05);
  for (int k : ks) {
    if (k < 2 || k > 4) throw Error(ErrorCode::kBadArgument, "odd-clique experiment supports 2 <= k <= 4");
  }
  const GridOrderon limit = odd_clique_limit();
  std::vector<OrderedGraph> graphs;
  for (int n : sizes) graphs.push_back(odd_clique(n));

  Table t{"densities", {"k", "pattern", "family", "limit", "t_orderon"}, {}};
  for (int n : sizes) t.columns.push_back("t_graph_H" + std::to_string(n));

  bool exact_ok = true, converge_ok = true;
  double worst_exact = 0.0, worst_gap = 0.0;
  for (int k : ks) {
    std::vector<std::tuple<PatternGraph, std::string, double>> rows;
    rows.emplace_back(PatternGraph::empty(k), "empty", (k + 1) * std::ldexp(1.0, -k));
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      if (std::popcount(mask) >= 2) rows.emplace_back(clique_on(k, mask), "clique+isolated", std::ldexp(1.0, -k));
    }
    if (k >= 3) rows.emplace_back(PatternGraph::from_edges(k, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}), "path", 0.0);

    std::vector<std::vector<Json>> out(rows.size());
    parallel_for(static_cast<int>(rows.size()), c.threads, [&](int i) {
      const auto& [f, family, expected] = rows[i];
      const double tw = t_orderon(f, limit).value;
      std::vector<Json> row{k, pattern_label(f), family, expected, tw};
      for (const OrderedGraph& g : graphs) row.push_back(t_graph(f, g).value);
      out[i] = std::move(row);
    });
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double expected = std::get<2>(rows[i]);
      const double err = std::abs(out[i][4].get<double>() - expected);
      worst_exact = std::max(worst_exact, err);
      exact_ok = exact_ok && err <= 1e-10;
      const auto pos = std::find(sizes.begin(), sizes.end(), reference);
      if (pos != sizes.end() && std::get<1>(rows[i]) != "path") {
        const double gap = std::abs(out[i][5 + (pos - sizes.begin())].get<double>() - expected);
        worst_gap = std::max(worst_gap, gap);
        converge_ok = converge_ok && gap <= tolerance;
      }
      t.rows.push_back(std::move(out[i]));
    }
  }
  r.tables.push_back(std::move(t));
  r.checks.push_back(check("limit densities exact", exact_ok, "max error " + fmt(worst_exact)));
  if (std::find(sizes.begin(), sizes.end(), reference) != sizes.end()) {
    r.checks.push_back(check("H_" + std::to_string(reference) + " within tolerance", converge_ok,
                             "max gap " + fmt(worst_gap) + " (tolerance " + fmt(tolerance) + ")"));
  }
  return r;
}

ExperimentReport run_furthest(const ExperimentConfig& c) {
  ExperimentReport r = start(c);
  const int n = param<int>(c, "n", 2000);
  const int seeds = param<int>(c, "seeds", 5);
  const int blocks = param<int>(c, "blocks", 16);
  const auto ps = param<std::vector<double>>(c, "ps", {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9});
  if (n < 100) throw Error(ErrorCode::kBadArgument, "furthest experiment needs n >= 100");

  struct Job {
    std::string family;
    double p;
    int seed;
  };
  std::vector<Job> jobs;
  for (double p : ps)
    for (int s = 0; s < seeds; ++s) jobs.push_back({"gnp", p, s});
  jobs.push_back({"extremal", 0.0, 0});
  for (int s = 0; s < seeds; ++s) jobs.push_back({"staircase_sbm", 0.0, s});

  const SbmSpec staircase = SbmSpec::staircase(blocks);
  std::vector<ThresholdDistance> results(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), c.threads, [&](int i) {
    const Job& j = jobs[i];
    const std::uint64_t seed = derive_seed(c.seed, static_cast<std::uint64_t>(i));
    if (j.family == "gnp") {
      results[i] = dist_threshold(gnp(n, j.p, seed));
    } else if (j.family == "extremal") {
      results[i] = dist_threshold(extremal_graph(n));
    } else {
      results[i] = dist_threshold(sbm_consecutive(n, staircase, seed));
    }
  });

  Table t{"distances", {"family", "n", "p", "seed_index", "distance", "threshold", "reference"}, {}};
  bool gnp_ok = true;
  double worst = 0.0;
  int sbm_hits = 0;
  double extremal = 0.0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Job& j = jobs[i];
    const double reference = j.family == "gnp" ? j.p * (1 - j.p) : 0.5;
    t.rows.push_back({j.family, n, j.p, j.seed, results[i].distance, results[i].threshold, reference});
    if (j.family == "gnp" && (std::abs(j.p - 0.2) < 1e-9 || std::abs(j.p - 0.5) < 1e-9 || std::abs(j.p - 0.8) < 1e-9)) {
      const double gap = std::abs(results[i].distance - reference);
      worst = std::max(worst, gap);
      gnp_ok = gnp_ok && gap <= 0.02;
    }
    if (j.family == "extremal") extremal = results[i].distance;
    if (j.family == "staircase_sbm" && results[i].distance >= 0.45) ++sbm_hits;
  }
  r.tables.push_back(std::move(t));
  r.checks.push_back(check("gnp distance within 0.02 of p(1-p)", gnp_ok, "max gap " + fmt(worst)));
  r.checks.push_back(check("extremal distance >= 0.48", extremal >= 0.48, "distance " + fmt(extremal)));
  const int needed = seeds - seeds / 5;
  r.checks.push_back(check("staircase SBM distance >= 0.45", sbm_hits >= needed,
                           std::to_string(sbm_hits) + " of " + std::to_string(seeds) + " seeds"));
  return r;
}

ExperimentReport run_sampling_decay(const ExperimentConfig& c) {
  ExperimentReport r = start(c);
  const auto ks = param<std::vector<int>>(c, "ks", {16, 64, 256});
  const int seeds = param<int>(c, "seeds", 30);
  const auto resolutions = param<std::vector<int>>(c, "resolutions", {1, 2, 4, 8, 16, 32});
  const int anneal_steps = param<int>(c, "anneal_steps", 0);
  const bool control = param<bool>(c, "control", true);

  const GridOrderon limit = odd_clique_limit();
  const GridOrderon full = GridOrderon::constant(1.0);

  // Best certified bound over the resolution ladder, budget 1/r at each rung.
  auto best_bound = [&](const GridOrderon& w, const GridOrderon& u, int k, std::uint64_t seed) {
    double best = std::numeric_limits<double>::infinity();
    for (int res : resolutions) {
      if (res > k) continue;
      CsOptions opt;
      opt.resolution = res;
      opt.budget = 1.0 / res;
      opt.seed = derive_seed(seed, static_cast<std::uint64_t>(res));
      opt.anneal_steps = anneal_steps;
      opt.max_exhaustive = 64;
      best = std::min(best, cs_upper(w, u, opt).value);
    }
    return best;
  };

  const int total = static_cast<int>(ks.size()) * seeds;
  std::vector<double> values(static_cast<std::size_t>(total)), controls(static_cast<std::size_t>(total));
  parallel_for(total, c.threads, [&](int i) {
    const int k = ks[i / seeds];
    const std::uint64_t seed = derive_seed(c.seed, static_cast<std::uint64_t>(i));
    values[i] = best_bound(limit, embed(sample_graph(k, limit, seed)), k, seed);
    if (control) controls[i] = best_bound(full, embed(sample_graph(k, full, seed)), k, seed);
  });

  Table per_seed{"per_seed", {"k", "seed_index", "cs_upper", "control_cs_upper"}, {}};
  Table medians{"medians", {"k", "median_cs_upper", "control_median"}, {}};
  std::vector<double> med;
  bool control_ok = true;
  for (std::size_t a = 0; a < ks.size(); ++a) {
    std::vector<double> v(values.begin() + a * seeds, values.begin() + (a + 1) * seeds);
    std::vector<double> cv(controls.begin() + a * seeds, controls.begin() + (a + 1) * seeds);
    for (int s = 0; s < seeds; ++s) per_seed.rows.push_back({ks[a], s, v[s], control ? Json(cv[s]) : Json()});
    med.push_back(median(v));
    const double cmed = median(cv);
    medians.rows.push_back({ks[a], med.back(), control ? Json(cmed) : Json()});
    // K_k against the constant 1 differs only on the diagonal blocks.
    if (control) control_ok = control_ok && *std::max_element(cv.begin(), cv.end()) <= 1.0 / ks[a] + 1e-9;
  }
  r.tables.push_back(std::move(medians));
  r.tables.push_back(std::move(per_seed));
  bool decreasing = true;
  std::string detail;
  for (std::size_t a = 0; a < med.size(); ++a) {
    if (a > 0) decreasing = decreasing && med[a] < med[a - 1];
    detail += (a ? " > " : "") + fmt(med[a]);
  }
  r.checks.push_back(check("medians strictly decreasing", decreasing, detail));
  if (control) r.checks.push_back(check("constant control at most 1/k", control_ok, ""));
  return r;
}

ExperimentReport run_estimability(const ExperimentConfig& c) {
  ExperimentReport r = start(c);
  const int n = param<int>(c, "n", 2000);
  const double p = param<double>(c, "p", 0.5);
  const auto ks = param<std::vector<int>>(c, "ks", {25, 50, 100, 200});
  const int trials = param<int>(c, "trials", 100);
  const int target_k = param<int>(c, "target_k", 200);

  const OrderedGraph random = gnp(n, p, derive_seed(c.seed, 0));
  const OrderedGraph extremal = extremal_graph(n);
  struct Row {
    std::string graph, parameter;
    const OrderedGraph* g;
    GraphParameter f;
  };
  const std::vector<Row> setups{{"gnp", "edge_density", &random, GraphParameter::edge_density()},
                                {"gnp", "threshold_distance", &random, GraphParameter::threshold_distance()},
                                {"extremal", "edge_density", &extremal, GraphParameter::edge_density()},
                                {"extremal", "threshold_distance", &extremal, GraphParameter::threshold_distance()}};

  Table t{"quantiles", {"graph", "parameter", "k", "trials", "full_value", "mean"}, {}};
  for (double level : kQuantileLevels) t.columns.push_back("q" + fmt(level));
  bool edge_ok = false, threshold_ok = false, shrink_ok = true;
  std::string edge_detail, threshold_detail;
  for (std::size_t s = 0; s < setups.size(); ++s) {
    std::vector<double> q90;
    for (std::size_t a = 0; a < ks.size(); ++a) {
      const auto report = estimate_parameter(*setups[s].g, setups[s].f, ks[a], trials,
                                             derive_seed(c.seed, 1000 * (s + 1) + a), c.threads);
      std::vector<Json> row{setups[s].graph, setups[s].parameter, ks[a], trials, report.full_value, report.mean};
      double median_dev = 0.0;
      for (const auto& [level, value] : report.quantiles) {
        row.push_back(value);
        if (level == 0.9) q90.push_back(value);
        if (level == 0.5) median_dev = value;
      }
      t.rows.push_back(std::move(row));
      if (ks[a] == target_k && s == 0) {
        edge_ok = q90.back() <= 0.05;
        edge_detail = "q90 " + fmt(q90.back());
      }
      if (ks[a] == target_k && s == 3) {
        threshold_ok = median_dev <= 0.05;
        threshold_detail = "median " + fmt(median_dev);
      }
    }
    // Constant parameters (e.g. on complete graphs) have no deviation to shrink.
    if (q90.size() >= 2 && q90.front() > 0) shrink_ok = shrink_ok && q90.back() < q90.front();
  }
  r.tables.push_back(std::move(t));
  if (std::find(ks.begin(), ks.end(), target_k) != ks.end()) {
    r.checks.push_back(check("gnp edge density q90 <= 0.05 at k=" + std::to_string(target_k), edge_ok, edge_detail));
    r.checks.push_back(check("extremal threshold distance median <= 0.05 at k=" + std::to_string(target_k),
                             threshold_ok, threshold_detail));
  }
  r.checks.push_back(check("q90 deviation shrinks from smallest to largest k", shrink_ok, ""));
  return r;
}

ExperimentReport run_tester(const ExperimentConfig& c) {
  ExperimentReport r = start(c);
  const int n = param<int>(c, "n", 2000);
  const double p = param<double>(c, "p", 0.5);
  const auto ks = param<std::vector<int>>(c, "ks", {10, 20, 30, 40});
  const int seeds = param<int>(c, "seeds", 200);
  const int target_k = param<int>(c, "target_k", 30);
  const double target_rate = param<double>(c, "target_rate", 0.9);

  // A member: clique prefix, independent suffix, random edges across.
  OrderedGraph member = gnp(n, p, derive_seed(c.seed, 1));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (v < n / 2) member.set_edge(u, v, true);
      if (u >= n / 2) member.set_edge(u, v, false);
    }
  const OrderedGraph far = gnp(n, p, derive_seed(c.seed, 0));
  const OrderedGraph extremal = extremal_graph(n);
  const PropertySpec threshold = PropertySpec::threshold();
  const std::vector<std::pair<std::string, const OrderedGraph*>> graphs{
      {"gnp", &far}, {"extremal", &extremal}, {"member", &member}};

  Table t{"rejections", {"graph", "k", "seeds", "rejections", "rate", "distance"}, {}};
  bool far_ok = false, member_ok = true;
  std::string far_detail;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const double dist = dist_threshold(*graphs[gi].second).distance;
    for (std::size_t a = 0; a < ks.size(); ++a) {
      std::vector<char> rejected(static_cast<std::size_t>(seeds));
      parallel_for(seeds, c.threads, [&](int s) {
        const std::uint64_t seed = derive_seed(c.seed, 100000 * (gi + 1) + 1000 * a + static_cast<std::uint64_t>(s));
        rejected[s] = !removal_tester(*graphs[gi].second, threshold, ks[a], seed).accepted;
      });
      const int count = static_cast<int>(std::count(rejected.begin(), rejected.end(), 1));
      const double rate = static_cast<double>(count) / seeds;
      t.rows.push_back({graphs[gi].first, ks[a], seeds, count, rate, dist});
      if (graphs[gi].first == "gnp" && ks[a] == target_k) {
        far_ok = rate >= target_rate;
        far_detail = "rate " + fmt(rate);
      }
      if (graphs[gi].first == "member") member_ok = member_ok && count == 0;
    }
  }
  r.tables.push_back(std::move(t));
  if (std::find(ks.begin(), ks.end(), target_k) != ks.end()) {
    r.checks.push_back(check("gnp rejected at k=" + std::to_string(target_k), far_ok, far_detail));
  }
  r.checks.push_back(check("member never rejected", member_ok, ""));
  return r;
}

ExperimentReport run_experiment(const ExperimentConfig& c) {
  if (c.name == "odd-clique") return run_odd_clique(c);
  if (c.name == "furthest") return run_furthest(c);
  if (c.name == "sampling-decay") return run_sampling_decay(c);
  if (c.name == "estimability") return run_estimability(c);
  if (c.name == "tester") return run_tester(c);
  throw Error(ErrorCode::kBadArgument, "unknown experiment '" + c.name + "'");
}

}  // namespace orderon
