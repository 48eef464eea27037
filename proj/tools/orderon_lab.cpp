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

// orderon-lab: command-line front end. Exit codes: 0 success, 1 usage or
// input error, 2 failed experiment assertion.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "orderon/csdist.hpp"
#include "orderon/density.hpp"
#include "orderon/error.hpp"
#include "orderon/experiments.hpp"
#include "orderon/generators.hpp"
#include "orderon/hereditary.hpp"
#include "orderon/io.hpp"
#include "orderon/norms.hpp"
#include "orderon/regularity.hpp"
#include "orderon/rng.hpp"

namespace fs = std::filesystem;
using orderon::io::Json;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::string out;
  int threads = 1;
  std::string config;
};

// Orderon JSON or an edge-list graph (embedded as a block orderon).
orderon::GridOrderon load_kernel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw orderon::Error(orderon::ErrorCode::kParse, "cannot open " + path);
  if ((in >> std::ws).peek() == '{') return orderon::io::load_orderon(path);
  return orderon::embed(orderon::io::read_graph(in));
}

void emit(const Globals& g, const Json& j) {
  if (g.out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    orderon::io::save_json(g.out, j);
  }
}

orderon::PropertySpec parse_property(const std::string& text) {
  if (text == "threshold") return orderon::PropertySpec::threshold();
  if (text.rfind("family:", 0) == 0) return orderon::io::load_family(text.substr(7));
  throw orderon::Error(orderon::ErrorCode::kBadArgument, "property must be 'threshold' or 'family:<file>'");
}

orderon::GraphParameter parse_parameter(const std::string& text) {
  if (text == "edge") return orderon::GraphParameter::edge_density();
  if (text == "threshold") return orderon::GraphParameter::threshold_distance();
  if (text.rfind("pattern:", 0) == 0) return orderon::GraphParameter::pattern_density(orderon::io::load_pattern(text.substr(8)));
  throw orderon::Error(orderon::ErrorCode::kBadArgument, "parameter must be edge, threshold or pattern:<file>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orderon-lab: ordered graph limits toolkit"};
  app.set_version_flag("--version", std::string(orderon::library_version()));
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Base random seed")->capture_default_str();
  app.add_option("--out", g.out, "Output file (JSON reports) or directory (run, sample)");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--config", g.config, "Experiment config JSON (run)")->check(CLI::ExistingFile);

  // density
  auto* density = app.add_subcommand("density", "Ordered subgraph density t(F, G) or t(F, W)");
  std::string pattern_file, graph_file, orderon_file, method = "exact";
  long trials = 10000;
  int k_max = orderon::kDefaultMaxPatternSize;
  density->add_option("--pattern", pattern_file, "Pattern file (edge list or JSON)")->required()->check(CLI::ExistingFile);
  auto* graph_opt = density->add_option("--graph", graph_file, "Graph edge-list file")->check(CLI::ExistingFile);
  auto* orderon_opt = density->add_option("--orderon", orderon_file, "Orderon JSON file")->check(CLI::ExistingFile);
  graph_opt->excludes(orderon_opt);
  density->add_option("--method", method, "exact | mc")->check(CLI::IsMember({"exact", "mc"}))->capture_default_str();
  density->add_option("--trials", trials, "Monte-Carlo trials")->check(CLI::PositiveNumber)->capture_default_str();
  density->add_option("--kmax", k_max, "Pattern size cap")->capture_default_str();

  // cutnorm
  auto* cutnorm = app.add_subcommand("cutnorm", "Cut norm of A - B");
  std::string a_file, b_file, mode = "exact";
  int depth = 4, restarts = 16;
  cutnorm->add_option("--a", a_file, "Orderon JSON or graph file")->required()->check(CLI::ExistingFile);
  cutnorm->add_option("--b", b_file, "Orderon JSON or graph file")->required()->check(CLI::ExistingFile);
  cutnorm->add_option("--mode", mode, "exact | heuristic | ordered | upper")
      ->check(CLI::IsMember({"exact", "heuristic", "ordered", "upper"}))
      ->capture_default_str();
  cutnorm->add_option("--depth", depth, "Ordered-norm refinement depth")->check(CLI::NonNegativeNumber)->capture_default_str();
  cutnorm->add_option("--restarts", restarts, "Heuristic random restarts")->check(CLI::NonNegativeNumber)->capture_default_str();

  // csdist
  auto* csdist = app.add_subcommand("csdist", "Certified bounds on the cut-shift distance");
  orderon::CsOptions cs;
  int cs_kmax = 3;
  csdist->add_option("--a", a_file, "Orderon JSON or graph file")->required()->check(CLI::ExistingFile);
  csdist->add_option("--b", b_file, "Orderon JSON or graph file")->required()->check(CLI::ExistingFile);
  csdist->add_option("--resolution", cs.resolution, "Column resolution r")->check(CLI::PositiveNumber)->capture_default_str();
  csdist->add_option("--budget", cs.budget, "Maximum shift cost")->check(CLI::NonNegativeNumber)->capture_default_str();
  csdist->add_option("--kmax", cs_kmax, "Largest pattern size for the lower bound")->check(CLI::Range(2, 6))->capture_default_str();
  csdist->add_option("--anneal-steps", cs.anneal_steps, "Annealing steps")->check(CLI::NonNegativeNumber)->capture_default_str();

  // sample
  auto* sample = app.add_subcommand("sample", "Generate random ordered graphs");
  std::string gnp_spec, sbm_file;
  int k = 0, count = 1;
  bool exact_sizes = false;
  auto* s_orderon = sample->add_option("--orderon", orderon_file, "Sample G(k, W)")->check(CLI::ExistingFile);
  auto* s_gnp = sample->add_option("--gnp", gnp_spec, "Erdos-Renyi 'n,p'");
  auto* s_sbm = sample->add_option("--sbm", sbm_file, "Consecutive SBM spec JSON")->check(CLI::ExistingFile);
  s_orderon->excludes(s_gnp)->excludes(s_sbm);
  s_gnp->excludes(s_sbm);
  sample->add_option("--k", k, "Vertex count (orderon, sbm)");
  sample->add_option("--count", count, "Number of graphs")->check(CLI::PositiveNumber)->capture_default_str();
  sample->add_flag("--exact-sizes", exact_sizes, "SBM with rounded exact block sizes");

  // hered
  auto* hered = app.add_subcommand("hered", "Hereditary properties: membership, distance, testing, estimation");
  std::string property = "threshold", op = "member", parameter = "edge";
  int hk = 0, htrials = 100;
  hered->add_option("--graph", graph_file, "Graph edge-list file")->required()->check(CLI::ExistingFile);
  hered->add_option("--property", property, "threshold | family:<file>")->capture_default_str();
  hered->add_option("--op", op, "member | dist | test | estimate")
      ->check(CLI::IsMember({"member", "dist", "test", "estimate"}))
      ->capture_default_str();
  hered->add_option("--k", hk, "Sample size (test, estimate)");
  hered->add_option("--trials", htrials, "Trials (estimate)")->check(CLI::PositiveNumber)->capture_default_str();
  hered->add_option("--parameter", parameter, "edge | threshold | pattern:<file> (estimate)")->capture_default_str();

  // fk
  auto* fk = app.add_subcommand("fk", "Weak-regularity partition");
  double eps = 0.3;
  fk->add_option("--orderon", orderon_file, "Orderon JSON or graph file")->required()->check(CLI::ExistingFile);
  fk->add_option("--eps", eps, "Target residual")->check(CLI::PositiveNumber)->capture_default_str();

  // run
  auto* run = app.add_subcommand("run", "Run a named experiment and write CSV + JSON reports");
  std::string experiment;
  run->add_option("experiment", experiment, "odd-clique | furthest | sampling-decay | estimability | tester")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (density->parsed()) {
      if (graph_file.empty() == orderon_file.empty()) {
        throw orderon::Error(orderon::ErrorCode::kBadArgument, "give exactly one of --graph / --orderon");
      }
      const auto f = orderon::io::load_pattern(pattern_file);
      orderon::DensityReport r;
      if (!graph_file.empty()) {
        if (method == "mc") {
          r = orderon::t_montecarlo(f, orderon::embed(orderon::io::load_graph(graph_file)), trials, g.seed, g.threads);
        } else {
          r = orderon::t_graph(f, orderon::io::load_graph(graph_file), k_max);
        }
      } else {
        const auto w = orderon::io::load_orderon(orderon_file);
        r = method == "mc" ? orderon::t_montecarlo(f, w, trials, g.seed, g.threads) : orderon::t_orderon(f, w, k_max);
      }
      emit(g, orderon::io::to_json(r));
    } else if (cutnorm->parsed()) {
      const auto d = orderon::StepKernel::difference(load_kernel(a_file), load_kernel(b_file));
      orderon::NormCertificate c;
      if (mode == "exact") {
        c = orderon::cut_norm_exact(d);
      } else if (mode == "heuristic") {
        c = orderon::cut_norm_heuristic(d, restarts, g.seed);
      } else if (mode == "ordered") {
        c = orderon::ordered_cut_norm(d, depth, restarts, g.seed);
      } else {
        c = orderon::cut_norm_upper_bound(d);
      }
      emit(g, orderon::io::to_json(c));
    } else if (csdist->parsed()) {
      cs.seed = g.seed;
      emit(g, orderon::io::to_json(orderon::cs_bounds(load_kernel(a_file), load_kernel(b_file), cs, cs_kmax)));
    } else if (sample->parsed()) {
      const fs::path dir = g.out.empty() ? fs::path("samples") : fs::path(g.out);
      fs::create_directories(dir);
      Json files = Json::array();
      for (int i = 0; i < count; ++i) {
        const std::uint64_t seed = orderon::derive_seed(g.seed, static_cast<std::uint64_t>(i));
        std::optional<orderon::OrderedGraph> graph;
        if (!orderon_file.empty()) {
          if (k < 1) throw orderon::Error(orderon::ErrorCode::kBadArgument, "--k >= 1 required");
          graph = orderon::sample_graph(k, orderon::io::load_orderon(orderon_file), seed);
        } else if (!gnp_spec.empty()) {
          const auto comma = gnp_spec.find(',');
          if (comma == std::string::npos) throw orderon::Error(orderon::ErrorCode::kBadArgument, "--gnp expects n,p");
          graph = orderon::gnp(std::stoi(gnp_spec.substr(0, comma)), std::stod(gnp_spec.substr(comma + 1)), seed);
        } else if (!sbm_file.empty()) {
          if (k < 1) throw orderon::Error(orderon::ErrorCode::kBadArgument, "--k >= 1 required");
          graph = orderon::sbm_consecutive(k, orderon::io::sbm_from_json(orderon::io::load_json(sbm_file)), seed,
                                           exact_sizes);
        } else {
          throw orderon::Error(orderon::ErrorCode::kBadArgument, "give one of --orderon, --gnp, --sbm");
        }
        const fs::path path = dir / ("graph_" + std::to_string(i) + ".txt");
        orderon::io::save_graph(path, *graph);
        files.push_back(path.string());
      }
      std::cout << Json{{"files", files}}.dump(2) << '\n';
    } else if (hered->parsed()) {
      const auto graph = orderon::io::load_graph(graph_file);
      const auto spec = parse_property(property);
      if (op == "member") {
        emit(g, orderon::io::to_json(orderon::is_member(graph, spec)));
      } else if (op == "dist") {
        if (spec.kind() != orderon::PropertySpec::Kind::kThreshold) {
          throw orderon::Error(orderon::ErrorCode::kBadArgument, "exact distance is only available for the threshold property");
        }
        emit(g, orderon::io::to_json(orderon::dist_threshold(graph)));
      } else if (op == "test") {
        emit(g, orderon::io::to_json(orderon::removal_tester(graph, spec, hk, g.seed)));
      } else {
        emit(g, orderon::io::to_json(
                    orderon::estimate_parameter(graph, parse_parameter(parameter), hk, htrials, g.seed, g.threads)));
      }
    } else if (fk->parsed()) {
      emit(g, orderon::io::to_json(orderon::fk_partition(load_kernel(orderon_file), eps, g.seed)));
    } else if (run->parsed()) {
      Json cfg = g.config.empty() ? Json::object() : orderon::io::load_json(g.config);
      cfg["name"] = experiment;
      if (app.count("--seed") || !cfg.contains("seed")) cfg["seed"] = g.seed;
      if (app.count("--threads") || !cfg.contains("threads")) cfg["threads"] = g.threads;
      if (!g.out.empty() || !cfg.contains("out")) cfg["out"] = g.out.empty() ? std::string("results") : g.out;
      const auto config = orderon::ExperimentConfig::from_json(cfg);
      const auto report = orderon::run_experiment(config);
      const auto files = orderon::write_report(report, config.out_dir);
      for (const auto& c : report.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
      }
      for (const auto& f : files) std::cout << "wrote " << f.string() << '\n';
      return report.passed() ? 0 : 2;
    }
  } catch (const orderon::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
