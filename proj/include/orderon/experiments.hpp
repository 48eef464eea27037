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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "orderon/io.hpp"

namespace orderon {

std::string_view library_version() noexcept;

/// Names accepted by run_experiment.
inline constexpr std::string_view kExperimentNames[] = {"odd-clique", "furthest", "sampling-decay", "estimability",
                                                        "tester"};

struct ExperimentConfig {
  std::string name;
  std::uint64_t seed = 1;
  std::filesystem::path out_dir = "results";
  int threads = 1;
  io::Json params = io::Json::object();  // per-experiment overrides; see docs/formats.md

  /// {"name", "seed", "out", "threads", "params"}; unknown names -> kBadArgument.
  static ExperimentConfig from_json(const io::Json& j);
  io::Json to_json() const;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<io::Json>> rows;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExperimentReport {
  std::string name;
  io::Json config;
  std::vector<Table> tables;
  std::vector<Check> checks;

  bool passed() const noexcept;
  io::Json manifest() const;
};

ExperimentReport run_odd_clique(const ExperimentConfig& config);
ExperimentReport run_furthest(const ExperimentConfig& config);
ExperimentReport run_sampling_decay(const ExperimentConfig& config);
ExperimentReport run_estimability(const ExperimentConfig& config);
ExperimentReport run_tester(const ExperimentConfig& config);

/// Dispatches on config.name.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Writes <out_dir>/<name>_<table>.csv for every table and the manifest
/// <out_dir>/<name>.json. Returns the files written.
std::vector<std::filesystem::path> write_report(const ExperimentReport& report, const std::filesystem::path& out_dir);

std::string to_csv(const Table& table);

/// Median of a non-empty sample (mean of the two middle values when even).
double median(std::vector<double> values);

}  // namespace orderon
