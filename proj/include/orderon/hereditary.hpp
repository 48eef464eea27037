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
#include <optional>
#include <utility>
#include <vector>

#include "orderon/graph.hpp"
#include "orderon/grid.hpp"
#include "orderon/property.hpp"

namespace orderon {

/// Vertices are 0-based throughout.
struct MembershipVerdict {
  bool member = true;
  /// Violating vertex tuple, strictly increasing except that the threshold
  /// witness (u1, u2, u3, u4) may have u2 == u3.
  std::vector<int> witness;
  /// Threshold members: the largest i such that [0, i) is a clique and
  /// [i, n) is independent. -1 otherwise.
  int threshold = -1;
  /// Forbidden-family violations: index into the family. -1 otherwise.
  int pattern = -1;
};

MembershipVerdict is_member_threshold(const OrderedGraph& g);

/// Brute force over increasing vertex tuples; kGraphTooLarge when
/// C(n, k) exceeds kForbiddenSearchBudget for the largest pattern size k.
MembershipVerdict is_member_forbidden(const OrderedGraph& g, const PropertySpec& spec);

/// Threshold properties use the O(n^2) scan, families the brute force.
MembershipVerdict is_member(const OrderedGraph& g, const PropertySpec& spec);

inline constexpr double kForbiddenSearchBudget = 5e8;

struct ThresholdDistance {
  double distance = 0.0;  // edits / C(n,2)
  int threshold = 0;      // prefix size i of the nearest member
  long edits = 0;
};

/// Exact edit distance to the threshold property: min over i in 0..n of the
/// non-edges inside [0,i) plus the edges inside [i,n), over C(n,2). The
/// smallest minimizing i is reported.
ThresholdDistance dist_threshold(const OrderedGraph& g);

/// Edge {u,v} iff u + v >= n in 1-based labels.
OrderedGraph extremal_graph(int n);

struct ClosureCheck {
  bool holds = true;
  std::optional<PatternGraph> witness;  // a forbidden pattern with positive density
  double max_density = 0.0;
};

/// Whether t(F, W) <= 1e-12 for every forbidden F on at most k_max vertices.
ClosureCheck closure_density_check(const GridOrderon& w, const PropertySpec& spec, int k_max);

/// Uniform k-subset of {0..n-1}, sorted.
std::vector<int> random_subset(int n, int k, std::uint64_t seed);

struct TesterVerdict {
  bool accepted = true;
  std::vector<int> sample;    // vertices of G
  MembershipVerdict verdict;  // on the sample; witness mapped back to G
};

/// Tests membership of the induced subgraph on a uniform k-subset.
TesterVerdict removal_tester(const OrderedGraph& g, const PropertySpec& spec, int k, std::uint64_t seed);

struct GraphParameter {
  enum class Kind { kEdgeDensity, kPatternDensity, kThresholdDistance };

  static GraphParameter edge_density() { return {Kind::kEdgeDensity, std::nullopt}; }
  static GraphParameter pattern_density(PatternGraph f) { return {Kind::kPatternDensity, f}; }
  static GraphParameter threshold_distance() { return {Kind::kThresholdDistance, std::nullopt}; }

  Kind kind;
  std::optional<PatternGraph> pattern;
};

double evaluate(const GraphParameter& f, const OrderedGraph& g);

struct EstimationReport {
  int k = 0;
  int trials = 0;
  double full_value = 0.0;
  std::vector<double> deviations;  // |f(G) - f(G|k)| per trial
  std::vector<std::pair<double, double>> quantiles;  // (level, value)
  double mean = 0.0;
};

/// Quantile levels reported by estimate_parameter.
inline constexpr double kQuantileLevels[] = {0.1, 0.25, 0.5, 0.75, 0.9, 0.99};

EstimationReport estimate_parameter(const OrderedGraph& g, const GraphParameter& f, int k, int trials,
                                    std::uint64_t seed, int threads = 1);

}  // namespace orderon
