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
#include <span>
#include <utility>
#include <vector>

namespace orderon {

/// Simple graph on vertices 0..n-1, ordered by index. Dense storage.
class OrderedGraph {
 public:
  /// Edgeless graph on n >= 1 vertices.
  explicit OrderedGraph(int n);

  /// Builds from 0-based pairs; throws kBadGraph on loops or out-of-range ends.
  static OrderedGraph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int size() const noexcept { return n_; }
  bool has_edge(int i, int j) const noexcept { return adj_[index(i, j)] != 0; }
  void set_edge(int i, int j, bool present);

  int edge_count() const noexcept;
  std::vector<std::pair<int, int>> edges() const;

  /// Induced subgraph on `vertices`, which must be strictly increasing.
  OrderedGraph induced(std::span<const int> vertices) const;

  friend bool operator==(const OrderedGraph&, const OrderedGraph&) = default;

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<std::uint8_t> adj_;
};

/// Symmetric [0,1] weights on vertices 0..n-1; the diagonal is allowed.
class WeightedOrderedGraph {
 public:
  explicit WeightedOrderedGraph(int n);

  int size() const noexcept { return n_; }
  double weight(int i, int j) const noexcept { return w_[index(i, j)]; }
  void set_weight(int i, int j, double w);

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<double> w_;
};

/// Small ordered pattern F = ([k], E). Edges are packed into a bitmask over
/// the pairs i < j in colex order, so k is capped at kMaxPatternSize.
class PatternGraph {
 public:
  static constexpr int kMaxPatternSize = 8;

  PatternGraph(int k, std::uint32_t edge_mask);
  static PatternGraph from_edges(int k, std::span<const std::pair<int, int>> edges);
  static PatternGraph empty(int k) { return PatternGraph(k, 0); }
  static PatternGraph complete(int k);
  static PatternGraph from_graph(const OrderedGraph& g);

  /// All 2^C(k,2) patterns on k vertices, in mask order.
  static std::vector<PatternGraph> all(int k);

  int size() const noexcept { return k_; }
  std::uint32_t mask() const noexcept { return mask_; }
  bool has_edge(int i, int j) const noexcept;
  int edge_count() const noexcept;
  std::vector<std::pair<int, int>> edges() const;
  OrderedGraph to_graph() const;

  static int pair_bit(int i, int j) noexcept;
  static int pair_count(int k) noexcept { return k * (k - 1) / 2; }

  friend bool operator==(const PatternGraph&, const PatternGraph&) = default;

 private:
  int k_;
  std::uint32_t mask_;
};

/// The odd-clique graph H_n on 2n vertices: 1-based vertices i != j are
/// adjacent iff both are odd (0-based: both even).
OrderedGraph odd_clique(int n);

/// t-blowup: vertex x of the result copies vertex floor(x / t) of g.
OrderedGraph blowup(const OrderedGraph& g, int t);

}  // namespace orderon
