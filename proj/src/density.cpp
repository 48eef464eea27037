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

#include "orderon/density.hpp"

#include <cmath>
#include <string>
#include <thread>

#include "orderon/error.hpp"
#include "orderon/generators.hpp"
#include "orderon/rng.hpp"

namespace orderon {
namespace {

void check_size(int k, int k_max) {
  if (k > k_max || k > PatternGraph::kMaxPatternSize) {
    throw Error(ErrorCode::kPatternTooLarge,
                "pattern has " + std::to_string(k) + " vertices, cap is " + std::to_string(k_max));
  }
  if (k < 1) throw Error(ErrorCode::kBadPattern, "pattern needs at least one vertex");
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Sorted vertex tuples v_0 <= ... <= v_{k-1}; the induced pattern is forced,
// so mismatching prefixes are pruned. `accept` receives the leaf mask.
class GraphWalker {
 public:
  GraphWalker(const OrderedGraph& g, int k) : g_(g), k_(k), verts_(static_cast<std::size_t>(k)) {}

  // Single pattern: returns sum of prod 1/r_v! over matching tuples.
  double count(const PatternGraph& f) {
    target_ = &f;
    total_ = 0.0;
    walk(0, 0, 1.0, 1, 0u);
    return total_;
  }

  std::vector<double> distribution() {
    target_ = nullptr;
    dist_.assign(std::size_t{1} << PatternGraph::pair_count(k_), 0.0);
    walk(0, 0, 1.0, 1, 0u);
    return dist_;
  }

 private:
  void walk(int pos, int start, double weight, int run, std::uint32_t mask) {
    if (pos == k_) {
      if (target_) {
        total_ += weight;
      } else {
        dist_[mask] += weight;
      }
      return;
    }
    for (int v = start; v < g_.size(); ++v) {
      std::uint32_t m = mask;
      bool ok = true;
      for (int s = 0; s < pos; ++s) {
        const bool edge = verts_[s] != v && g_.has_edge(verts_[s], v);
        if (edge) m |= 1u << PatternGraph::pair_bit(s, pos);
        if (target_ && edge != target_->has_edge(s, pos)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      verts_[pos] = v;
      const int r = (pos > 0 && verts_[pos - 1] == v) ? run + 1 : 1;
      walk(pos + 1, v, weight / r, r, m);
    }
  }

  const OrderedGraph& g_;
  int k_;
  std::vector<int> verts_;
  const PatternGraph* target_ = nullptr;
  double total_ = 0.0;
  std::vector<double> dist_;
};

// Cell sequences with nondecreasing columns. Cells are numbered
// column-major, so "column >= previous column" is a suffix of cell indices.
class OrderonWalker {
 public:
  OrderonWalker(const GridOrderon& w, int k) : w_(w), g_(w.grid()), k_(k), cells_(static_cast<std::size_t>(k)) {}

  double count(const PatternGraph& f) {
    target_ = &f;
    total_ = 0.0;
    walk(0, 1.0, 1, {1.0});
    return total_;
  }

  std::vector<double> distribution() {
    target_ = nullptr;
    dist_.assign(std::size_t{1} << PatternGraph::pair_count(k_), 0.0);
    walk(0, 1.0, 1, {1.0});
    return dist_;
  }

 private:
  // `partial` is the distribution over masks of the pairs among positions
  // < pos (distribution mode only).
  void walk(int pos, double weight, int run, const std::vector<double>& partial) {
    if (pos == k_) {
      if (target_) {
        total_ += weight;
      } else {
        for (std::size_t m = 0; m < partial.size(); ++m) dist_[m] += weight * partial[m];
      }
      return;
    }
    const int prev_col = pos > 0 ? g_.column_of(cells_[pos - 1]) : 0;
    const int first = g_.cell_index(prev_col, 0);
    for (int c = first; c < g_.num_cells(); ++c) {
      const double lam = g_.cell_measure(c);
      if (lam <= 0.0) continue;
      const int col = g_.column_of(c);
      const int r = (pos > 0 && col == prev_col) ? run + 1 : 1;
      double wt = weight * lam / r;
      if (target_) {
        for (int s = 0; s < pos && wt > 0.0; ++s) {
          const double p = w_.value(cells_[s], c);
          wt *= target_->has_edge(s, pos) ? p : 1.0 - p;
        }
        if (wt <= 0.0) continue;
        cells_[pos] = c;
        walk(pos + 1, wt, r, partial);
      } else {
        // Extend the mask distribution by the pairs (s, pos), s < pos.
        std::vector<double> next = partial;
        for (int s = 0; s < pos; ++s) {
          const double p = w_.value(cells_[s], c);
          const std::size_t width = next.size();
          next.resize(width * 2);
          for (std::size_t m = 0; m < width; ++m) {
            next[m + width] = next[m] * p;
            next[m] *= 1.0 - p;
          }
        }
        cells_[pos] = c;
        walk(pos + 1, wt, r, next);
      }
    }
  }

  const GridOrderon& w_;
  const Grid& g_;
  int k_;
  std::vector<int> cells_;
  const PatternGraph* target_ = nullptr;
  double total_ = 0.0;
  std::vector<double> dist_;
};

}  // namespace

DensityReport t_graph(const PatternGraph& f, const OrderedGraph& g, int k_max) {
  const int k = f.size();
  check_size(k, k_max);
  GraphWalker walker(g, k);
  const double value = walker.count(f) * factorial(k) / std::pow(static_cast<double>(g.size()), k);
  return DensityReport{value, DensityMethod::kExact, 0, 0.0};
}

DensityReport t_orderon(const PatternGraph& f, const GridOrderon& w, int k_max) {
  const int k = f.size();
  check_size(k, k_max);
  OrderonWalker walker(w, k);
  return DensityReport{walker.count(f) * factorial(k), DensityMethod::kExact, 0, 0.0};
}

std::vector<double> pattern_distribution(const OrderedGraph& g, int k, int k_max) {
  check_size(k, k_max);
  auto dist = GraphWalker(g, k).distribution();
  const double scale = factorial(k) / std::pow(static_cast<double>(g.size()), k);
  for (double& d : dist) d *= scale;
  return dist;
}

std::vector<double> pattern_distribution(const GridOrderon& w, int k, int k_max) {
  check_size(k, k_max);
  auto dist = OrderonWalker(w, k).distribution();
  const double scale = factorial(k);
  for (double& d : dist) d *= scale;
  return dist;
}

DensityReport t_montecarlo(const PatternGraph& f, const GridOrderon& w, long trials, std::uint64_t seed, int threads) {
  if (trials < 1) throw Error(ErrorCode::kBadArgument, "trials must be >= 1");
  const int k = f.size();
  auto run = [&](long begin, long end) {
    long hits = 0;
    for (long i = begin; i < end; ++i) {
      const OrderedGraph sample = sample_graph(k, w, derive_seed(seed, static_cast<std::uint64_t>(i)));
      if (PatternGraph::from_graph(sample) == f) ++hits;
    }
    return hits;
  };
  long hits = 0;
  if (threads <= 1) {
    hits = run(0, trials);
  } else {
    std::vector<long> partial(static_cast<std::size_t>(threads), 0);
    std::vector<std::jthread> pool;
    const long chunk = (trials + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const long b = std::min(trials, t * chunk), e = std::min(trials, (t + 1) * chunk);
      pool.emplace_back([&, t, b, e] { partial[t] = run(b, e); });
    }
    pool.clear();
    for (long h : partial) hits += h;
  }
  const double v = static_cast<double>(hits) / static_cast<double>(trials);
  return DensityReport{v, DensityMethod::kMonteCarlo, trials, std::sqrt(v * (1.0 - v) / static_cast<double>(trials))};
}

}  // namespace orderon
