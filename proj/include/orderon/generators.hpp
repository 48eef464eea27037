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

/// Stochastic block model: M blocks, symmetric connection probabilities p,
/// block probabilities q (uniform 1/M when empty at construction).
class SbmSpec {
 public:
  /// Throws kBadSpec for asymmetric / out-of-range p or q not summing to 1.
  SbmSpec(std::vector<std::vector<double>> p, std::vector<double> q = {});

  /// Staircase model: p_ij = 1 iff i + j >= M + 1 (1-based blocks).
  static SbmSpec staircase(int blocks);

  int blocks() const noexcept { return static_cast<int>(q_.size()); }
  double p(int i, int j) const noexcept { return p_[i][j]; }
  const std::vector<double>& q() const noexcept { return q_; }

 private:
  std::vector<std::vector<double>> p_;
  std::vector<double> q_;
};

/// Cell of each of the k sorted sample points of W (the X/Y draw of G(k, W)).
std::vector<int> sample_cells(int k, const GridOrderon& w, std::uint64_t seed);

/// G(k, W): sorted uniform x-coordinates, independent uniform layers, then
/// each pair i < j is an edge with probability W at the two points.
OrderedGraph sample_graph(int k, const GridOrderon& w, std::uint64_t seed);

/// H(k, W): the same points, returning the weights themselves.
WeightedOrderedGraph sample_weighted(int k, const GridOrderon& w, std::uint64_t seed);

OrderedGraph gnp(int n, double p, std::uint64_t seed);

/// Block sizes of a consecutive SBM draw. Independent assignment by default;
/// `exact_sizes` uses largest-remainder rounding of n q instead.
std::vector<int> sbm_block_sizes(int n, const SbmSpec& spec, std::uint64_t seed, bool exact_sizes = false);

/// Consecutive SBM: blocks occupy consecutive vertex ranges in block order.
OrderedGraph sbm_consecutive(int n, const SbmSpec& spec, std::uint64_t seed, bool exact_sizes = false);

}  // namespace orderon
