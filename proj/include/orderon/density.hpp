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
#include <vector>

#include "orderon/graph.hpp"
#include "orderon/grid.hpp"

namespace orderon {

/// Default cap on pattern size for exact counting.
inline constexpr int kDefaultMaxPatternSize = 6;

enum class DensityMethod { kExact, kMonteCarlo };

struct DensityReport {
  double value = 0.0;
  DensityMethod method = DensityMethod::kExact;
  long trials = 0;
  double std_error = 0.0;  // binomial standard error; 0 for exact
};

/// Probability that k vertices of G drawn uniformly with repetition and
/// sorted induce exactly F. A repeated vertex induces a non-edge with itself.
DensityReport t_graph(const PatternGraph& f, const OrderedGraph& g, int k_max = kDefaultMaxPatternSize);

/// Exact t(F, W) = Pr[G(k, W) = F] for a step orderon.
DensityReport t_orderon(const PatternGraph& f, const GridOrderon& w, int k_max = kDefaultMaxPatternSize);

/// Fraction of `trials` samples G(k, W) equal to F. Trial i uses
/// derive_seed(seed, i), so the result does not depend on `threads`.
DensityReport t_montecarlo(const PatternGraph& f, const GridOrderon& w, long trials, std::uint64_t seed,
                           int threads = 1);

/// t(F, G) for every F on k vertices, indexed by PatternGraph::mask().
std::vector<double> pattern_distribution(const OrderedGraph& g, int k, int k_max = kDefaultMaxPatternSize);

/// t(F, W) for every F on k vertices, indexed by PatternGraph::mask().
std::vector<double> pattern_distribution(const GridOrderon& w, int k, int k_max = kDefaultMaxPatternSize);

}  // namespace orderon
