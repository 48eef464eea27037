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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "orderon/density.hpp"
#include "orderon/graph.hpp"
#include "orderon/grid.hpp"
#include "orderon/norms.hpp"
#include "orderon/rng.hpp"
#include "orderon/shift_map.hpp"

namespace orderon::testing {

inline OrderedGraph random_graph(int n, double p, Rng& rng) {
  OrderedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) g.set_edge(i, j, true);
  return g;
}

inline std::vector<double> random_cuts(const std::vector<double>& candidates, Rng& rng) {
  std::vector<double> cuts{0.0};
  for (double c : candidates)
    if (rng.bernoulli(0.5)) cuts.push_back(c);
  cuts.push_back(1.0);
  return cuts;
}

/// Random symmetric tensor for a grid with entries in [lo, hi].
inline std::vector<double> random_tensor(int n, double lo, double hi, Rng& rng) {
  std::vector<double> v(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) v[static_cast<std::size_t>(i) * n + j] = v[static_cast<std::size_t>(j) * n + i] = lo + (hi - lo) * rng.uniform();
  return v;
}

/// Random grid with x-breakpoints among quarters and layer breakpoints
/// among halves, capped at `max_cells` cells.
inline Grid random_grid(Rng& rng, int max_cells = 12) {
  for (;;) {
    auto xs = random_cuts({0.25, 0.5, 0.75}, rng);
    std::vector<std::vector<double>> layers;
    for (std::size_t c = 0; c + 1 < xs.size(); ++c) layers.push_back(random_cuts({0.5}, rng));
    Grid g(xs, layers);
    if (g.num_cells() <= max_cells) return g;
  }
}

inline GridOrderon random_orderon(Rng& rng, int max_cells = 12) {
  Grid g = random_grid(rng, max_cells);
  auto v = random_tensor(g.num_cells(), 0.0, 1.0, rng);
  return GridOrderon(std::move(g), std::move(v));
}

inline StepKernel random_kernel(Rng& rng, int max_cells = 12) {
  Grid g = random_grid(rng, max_cells);
  auto v = random_tensor(g.num_cells(), -1.0, 1.0, rng);
  return StepKernel(std::move(g), std::move(v));
}

/// Kernel on m cells with random widths in one layer each.
inline StepKernel random_kernel_cells(int m, Rng& rng) {
  std::vector<double> xs{0.0};
  for (int i = 1; i < m; ++i) xs.push_back(static_cast<double>(i) / m + (rng.uniform() - 0.5) * 0.5 / m);
  xs.push_back(1.0);
  Grid g(xs, std::vector<std::vector<double>>(static_cast<std::size_t>(m), {0.0, 1.0}));
  return StepKernel(std::move(g), random_tensor(m, -1.0, 1.0, rng));
}

/// Oracle: brute force over all ordered k-tuples of vertices with repetition.
inline double brute_t_graph(const PatternGraph& f, const OrderedGraph& g) {
  const int k = f.size(), n = g.size();
  std::vector<int> tuple(static_cast<std::size_t>(k), 0);
  long hits = 0, total = 0;
  for (;;) {
    std::vector<int> sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    bool ok = true;
    for (int j = 1; j < k && ok; ++j)
      for (int i = 0; i < j && ok; ++i) {
        const bool edge = sorted[i] != sorted[j] && g.has_edge(sorted[i], sorted[j]);
        ok = edge == f.has_edge(i, j);
      }
    hits += ok;
    ++total;
    int pos = 0;
    while (pos < k && ++tuple[pos] == n) tuple[pos++] = 0;
    if (pos == k) break;
  }
  return static_cast<double>(hits) / static_cast<double>(total);
}

/// Oracle: cut norm by enumerating both S and T (m <= 10).
inline double brute_cut_norm(const StepKernel& d) {
  const int m = d.num_cells();
  const Grid& g = d.grid();
  double best = 0.0;
  for (unsigned s = 0; s < (1u << m); ++s) {
    for (unsigned t = 0; t < (1u << m); ++t) {
      double v = 0.0;
      for (int i = 0; i < m; ++i) {
        if (!((s >> i) & 1u)) continue;
        for (int j = 0; j < m; ++j)
          if ((t >> j) & 1u) v += d.value(i, j) * g.cell_measure(i) * g.cell_measure(j);
      }
      best = std::max(best, std::abs(v));
    }
  }
  return best;
}

/// Random column permutation at resolution r; some columns also get a
/// fixed vertical rearrangement.
inline ShiftMap random_shift_map(int r, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) perm[i] = i;
  for (int i = r - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  std::vector<std::vector<LayerMove>> moves(static_cast<std::size_t>(r));
  for (auto& m : moves) {
    if (rng.bernoulli(0.5)) m = {{0.0, 0.25, 0.75, 1.0}, {0.25, 1.0, 0.0, 0.75}};
  }
  return ShiftMap::with_layer_moves(perm, moves);
}

inline double factorial(int k) {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace orderon::testing
