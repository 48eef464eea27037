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

#include "orderon/graph.hpp"

#include <bit>
#include <string>

#include "orderon/error.hpp"

namespace orderon {

OrderedGraph::OrderedGraph(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::kBadGraph, "vertex count must be >= 1, got " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

OrderedGraph OrderedGraph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  OrderedGraph g(n);
  for (auto [i, j] : edges) g.set_edge(i, j, true);
  return g;
}

void OrderedGraph::set_edge(int i, int j, bool present) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw Error(ErrorCode::kBadGraph, "edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  if (i == j) throw Error(ErrorCode::kBadGraph, "self-loop at vertex " + std::to_string(i));
  adj_[index(i, j)] = adj_[index(j, i)] = present ? 1 : 0;
}

int OrderedGraph::edge_count() const noexcept {
  int count = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) count += adj_[index(i, j)];
  return count;
}

std::vector<std::pair<int, int>> OrderedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adj_[index(i, j)]) out.emplace_back(i, j);
  return out;
}

OrderedGraph OrderedGraph::induced(std::span<const int> vertices) const {
  OrderedGraph h(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    if (vertices[a] < 0 || vertices[a] >= n_ || (a > 0 && vertices[a] <= vertices[a - 1])) {
      throw Error(ErrorCode::kBadArgument, "induced(): vertex list must be strictly increasing and in range");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (has_edge(vertices[a], vertices[b])) h.set_edge(static_cast<int>(a), static_cast<int>(b), true);
    }
  }
  return h;
}

WeightedOrderedGraph::WeightedOrderedGraph(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::kBadGraph, "vertex count must be >= 1, got " + std::to_string(n));
  w_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
}

void WeightedOrderedGraph::set_weight(int i, int j, double w) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw Error(ErrorCode::kBadGraph, "weight index out of range");
  if (!(w >= 0.0 && w <= 1.0)) throw Error(ErrorCode::kOutOfRangeValue, "edge weight must lie in [0,1]");
  w_[index(i, j)] = w_[index(j, i)] = w;
}

int PatternGraph::pair_bit(int i, int j) noexcept {
  if (i > j) std::swap(i, j);
  // Pairs (0,1),(0,2),(1,2),(0,3),... : column-wise so the prefix of a
  // pattern on k' < k vertices occupies the low C(k',2) bits.
  return j * (j - 1) / 2 + i;
}

PatternGraph::PatternGraph(int k, std::uint32_t edge_mask) : k_(k), mask_(edge_mask) {
  if (k < 1 || k > kMaxPatternSize) {
    throw Error(ErrorCode::kBadPattern, "pattern size must be in [1," + std::to_string(kMaxPatternSize) + "]");
  }
  const int bits = pair_count(k);
  if (bits < 32 && (edge_mask >> bits) != 0) throw Error(ErrorCode::kBadPattern, "edge mask has bits beyond C(k,2)");
}

PatternGraph PatternGraph::from_edges(int k, std::span<const std::pair<int, int>> edges) {
  std::uint32_t mask = 0;
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= k || j >= k || i == j) {
      throw Error(ErrorCode::kBadPattern, "pattern edge (" + std::to_string(i) + "," + std::to_string(j) + ") invalid");
    }
    mask |= 1u << pair_bit(i, j);
  }
  return PatternGraph(k, mask);
}

PatternGraph PatternGraph::complete(int k) {
  const int bits = pair_count(k);
  return PatternGraph(k, bits == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << bits) - 1));
}

PatternGraph PatternGraph::from_graph(const OrderedGraph& g) {
  std::uint32_t mask = 0;
  const int k = g.size();
  if (k > kMaxPatternSize) throw Error(ErrorCode::kPatternTooLarge, "graph too large to convert to a pattern");
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i)
      if (g.has_edge(i, j)) mask |= 1u << pair_bit(i, j);
  return PatternGraph(k, mask);
}

std::vector<PatternGraph> PatternGraph::all(int k) {
  const int bits = pair_count(k);
  if (bits > 20) throw Error(ErrorCode::kPatternTooLarge, "refusing to enumerate 2^" + std::to_string(bits) + " patterns");
  std::vector<PatternGraph> out;
  out.reserve(std::size_t{1} << bits);
  for (std::uint32_t m = 0; m < (1u << bits); ++m) out.emplace_back(k, m);
  return out;
}

bool PatternGraph::has_edge(int i, int j) const noexcept {
  if (i == j) return false;
  return (mask_ >> pair_bit(i, j)) & 1u;
}

int PatternGraph::edge_count() const noexcept { return std::popcount(mask_); }

std::vector<std::pair<int, int>> PatternGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

OrderedGraph PatternGraph::to_graph() const {
  OrderedGraph g(k_);
  for (auto [i, j] : edges()) g.set_edge(i, j, true);
  return g;
}

OrderedGraph odd_clique(int n) {
  if (n < 1) throw Error(ErrorCode::kBadArgument, "odd_clique needs n >= 1");
  OrderedGraph g(2 * n);
  for (int i = 0; i < 2 * n; i += 2)
    for (int j = i + 2; j < 2 * n; j += 2) g.set_edge(i, j, true);
  return g;
}

OrderedGraph blowup(const OrderedGraph& g, int t) {
  if (t < 1) throw Error(ErrorCode::kBadArgument, "blowup factor must be >= 1");
  const int n = g.size() * t;
  OrderedGraph out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (i / t != j / t && g.has_edge(i / t, j / t)) out.set_edge(i, j, true);
  return out;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAsymmetricValues: return "AsymmetricValues";
    case ErrorCode::kOutOfRangeValue: return "OutOfRangeValue";
    case ErrorCode::kBadBreakpoints: return "BadBreakpoints";
    case ErrorCode::kBadGraph: return "BadGraph";
    case ErrorCode::kBadPattern: return "BadPattern";
    case ErrorCode::kBadShiftMap: return "BadShiftMap";
    case ErrorCode::kPatternTooLarge: return "PatternTooLarge";
    case ErrorCode::kTooManyCells: return "TooManyCells";
    case ErrorCode::kDepthTooLarge: return "DepthTooLarge";
    case ErrorCode::kIncompatibleResolution: return "IncompatibleResolution";
    case ErrorCode::kBadSpec: return "BadSpec";
    case ErrorCode::kGraphTooLarge: return "GraphTooLarge";
    case ErrorCode::kEmptyBlock: return "EmptyBlock";
    case ErrorCode::kBadPartition: return "BadPartition";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kBadArgument: return "BadArgument";
  }
  return "Unknown";
}

}  // namespace orderon
