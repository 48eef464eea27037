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

#include "orderon/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "orderon/error.hpp"
#include "orderon/rng.hpp"

namespace orderon {

SbmSpec::SbmSpec(std::vector<std::vector<double>> p, std::vector<double> q) : p_(std::move(p)), q_(std::move(q)) {
  const std::size_t m = p_.size();
  if (m == 0) throw Error(ErrorCode::kBadSpec, "SBM needs at least one block");
  if (q_.empty()) q_.assign(m, 1.0 / static_cast<double>(m));
  if (q_.size() != m) throw Error(ErrorCode::kBadSpec, "q has " + std::to_string(q_.size()) + " entries, expected " + std::to_string(m));
  double total = 0.0;
  for (double v : q_) {
    if (!(v >= 0.0)) throw Error(ErrorCode::kBadSpec, "block probabilities must be nonnegative");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9) throw Error(ErrorCode::kBadSpec, "block probabilities sum to " + std::to_string(total));
  for (std::size_t i = 0; i < m; ++i) {
    if (p_[i].size() != m) throw Error(ErrorCode::kBadSpec, "p must be square");
    for (std::size_t j = 0; j < m; ++j) {
      if (!(p_[i][j] >= 0.0 && p_[i][j] <= 1.0)) throw Error(ErrorCode::kBadSpec, "p entries must lie in [0,1]");
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (p_[i][j] != p_[j][i]) throw Error(ErrorCode::kBadSpec, "p must be symmetric");
}

SbmSpec SbmSpec::staircase(int blocks) {
  if (blocks < 1) throw Error(ErrorCode::kBadSpec, "staircase needs M >= 1");
  std::vector<std::vector<double>> p(static_cast<std::size_t>(blocks), std::vector<double>(static_cast<std::size_t>(blocks)));
  for (int i = 0; i < blocks; ++i)
    for (int j = 0; j < blocks; ++j) p[i][j] = (i + 1) + (j + 1) >= blocks + 1 ? 1.0 : 0.0;
  return SbmSpec(std::move(p));
}

std::vector<int> sample_cells(int k, const GridOrderon& w, std::uint64_t seed) {
  if (k < 1) throw Error(ErrorCode::kBadArgument, "sample size must be >= 1");
  Rng rng(seed);
  std::vector<double> z(static_cast<std::size_t>(k)), y(static_cast<std::size_t>(k));
  for (double& v : z) v = rng.uniform();
  for (double& v : y) v = rng.uniform();
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  // Ties keep draw order.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return z[a] < z[b]; });
  std::vector<int> cells(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cells[i] = w.grid().locate(z[order[i]], y[i]);
  return cells;
}

OrderedGraph sample_graph(int k, const GridOrderon& w, std::uint64_t seed) {
  const std::vector<int> cells = sample_cells(k, w, seed);
  // Edge coins come from a separate stream so the point draw is shared with
  // sample_weighted for the same seed.
  Rng coins(derive_seed(seed, 0x5eed));
  OrderedGraph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (coins.uniform() < w.value(cells[i], cells[j])) g.set_edge(i, j, true);
  return g;
}

WeightedOrderedGraph sample_weighted(int k, const GridOrderon& w, std::uint64_t seed) {
  const std::vector<int> cells = sample_cells(k, w, seed);
  WeightedOrderedGraph h(k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) h.set_weight(i, j, w.value(cells[i], cells[j]));
  return h;
}

OrderedGraph gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::kBadArgument, "gnp needs p in [0,1]");
  Rng rng(seed);
  OrderedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform() < p) g.set_edge(i, j, true);
  return g;
}

std::vector<int> sbm_block_sizes(int n, const SbmSpec& spec, std::uint64_t seed, bool exact_sizes) {
  if (n < 1) throw Error(ErrorCode::kBadArgument, "SBM needs n >= 1");
  const int m = spec.blocks();
  std::vector<int> sizes(static_cast<std::size_t>(m), 0);
  if (exact_sizes) {
    std::vector<std::pair<double, int>> remainders;
    int assigned = 0;
    for (int i = 0; i < m; ++i) {
      const double share = n * spec.q()[i];
      sizes[i] = static_cast<int>(std::floor(share));
      assigned += sizes[i];
      remainders.emplace_back(share - sizes[i], i);
    }
    std::stable_sort(remainders.begin(), remainders.end(), [](auto& a, auto& b) { return a.first > b.first; });
    for (int r = 0; assigned < n; ++r, ++assigned) ++sizes[remainders[r % m].second];
    return sizes;
  }
  std::vector<double> cumulative(static_cast<std::size_t>(m));
  std::partial_sum(spec.q().begin(), spec.q().end(), cumulative.begin());
  Rng rng(seed);
  for (int v = 0; v < n; ++v) {
    const double u = rng.uniform();
    int b = static_cast<int>(std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
    ++sizes[std::min(b, m - 1)];
  }
  return sizes;
}

OrderedGraph sbm_consecutive(int n, const SbmSpec& spec, std::uint64_t seed, bool exact_sizes) {
  const std::vector<int> sizes = sbm_block_sizes(n, spec, seed, exact_sizes);
  std::vector<int> block_of;
  block_of.reserve(static_cast<std::size_t>(n));
  for (int b = 0; b < spec.blocks(); ++b) block_of.insert(block_of.end(), sizes[b], b);
  Rng rng(derive_seed(seed, 0xb10c));
  OrderedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform() < spec.p(block_of[i], block_of[j])) g.set_edge(i, j, true);
  return g;
}

}  // namespace orderon
