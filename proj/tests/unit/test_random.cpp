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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "helpers.hpp"
#include "orderon/density.hpp"
#include "orderon/error.hpp"
#include "orderon/generators.hpp"
#include "orderon/hereditary.hpp"

namespace orderon {
namespace {

using testing::random_orderon;

// Chi-squared critical value, 7 degrees of freedom, alpha = 0.001.
constexpr double kChi2Df7 = 24.322;

int pattern_index(const OrderedGraph& g) { return static_cast<int>(PatternGraph::from_graph(g).mask()); }

// Two-sample statistic for equal sample sizes; returns (statistic, df).
std::pair<double, int> two_sample_chi2(const std::vector<long>& a, const std::vector<long>& b) {
  double stat = 0.0;
  int used = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] + b[i] == 0) continue;
    const double diff = static_cast<double>(a[i] - b[i]);
    stat += diff * diff / static_cast<double>(a[i] + b[i]);
    ++used;
  }
  return {stat, used - 1};
}

TEST(SampleGraph, ConstantOrderons) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const OrderedGraph full = sample_graph(7, GridOrderon::constant(1.0), seed);
    EXPECT_EQ(full.edge_count(), 21);
    EXPECT_EQ(sample_graph(7, GridOrderon::constant(0.0), seed).edge_count(), 0);
  }
}

TEST(SampleGraph, EdgeCountMoments) {
  const int k = 10, samples = 2000;
  const double p = 0.3, pairs = 45;
  double total = 0.0;
  for (int s = 0; s < samples; ++s) total += sample_graph(k, GridOrderon::constant(p), derive_seed(5, s)).edge_count();
  const double mean = total / samples;
  const double sigma = std::sqrt(pairs * p * (1 - p) / samples);
  EXPECT_LE(std::abs(mean - p * pairs), 4 * sigma);
}

TEST(SampleGraph, Deterministic) {
  Rng rng(1);
  const GridOrderon w = random_orderon(rng);
  EXPECT_EQ(sample_graph(20, w, 42), sample_graph(20, w, 42));
  EXPECT_EQ(sample_cells(20, w, 42), sample_cells(20, w, 42));
  EXPECT_EQ(gnp(50, 0.5, 3), gnp(50, 0.5, 3));
}

TEST(SampleCells, SortedByColumn) {
  Rng rng(2);
  const GridOrderon w = random_orderon(rng);
  const auto cells = sample_cells(200, w, 5);
  for (std::size_t i = 1; i < cells.size(); ++i) {
    EXPECT_LE(w.grid().column_of(cells[i - 1]), w.grid().column_of(cells[i]));
  }
}

TEST(SampleWeighted, ConstantAndRange) {
  const WeightedOrderedGraph h = sample_weighted(6, GridOrderon::constant(0.35), 4);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(h.weight(i, j), 0.35);
  Rng rng(3);
  const GridOrderon w = random_orderon(rng);
  const std::set<double> entries(w.values().begin(), w.values().end());
  const WeightedOrderedGraph g = sample_weighted(30, w, 9);
  for (int i = 0; i < 30; ++i)
    for (int j = 0; j < 30; ++j) EXPECT_TRUE(entries.count(g.weight(i, j)));
}

TEST(SampleWeighted, ThresholdingMatchesGraphModel) {
  Rng rng(4);
  const GridOrderon w = random_orderon(rng);
  const int trials = 10000;
  std::vector<long> direct(8, 0), staged(8, 0);
  for (int t = 0; t < trials; ++t) {
    ++direct[pattern_index(sample_graph(3, w, derive_seed(100, t)))];
    const WeightedOrderedGraph h = sample_weighted(3, w, derive_seed(200, t));
    Rng coins(derive_seed(300, t));
    OrderedGraph g(3);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (coins.uniform() < h.weight(i, j)) g.set_edge(i, j, true);
    ++staged[pattern_index(g)];
  }
  const auto [stat, df] = two_sample_chi2(direct, staged);
  ASSERT_EQ(df, 7);
  EXPECT_LT(stat, kChi2Df7);
}

TEST(SampleGraph, MatchesFiniteGraphDensities) {
  Rng rng(5);
  const OrderedGraph g = testing::random_graph(12, 0.5, rng);
  const GridOrderon w = embed(g);
  const int trials = 10000;
  std::vector<long> counts(8, 0);
  for (int t = 0; t < trials; ++t) ++counts[pattern_index(sample_graph(3, w, derive_seed(7, t)))];
  for (const PatternGraph& f : PatternGraph::all(3)) {
    const double expected = t_graph(f, g).value;
    const double sigma = std::sqrt(expected * (1 - expected) / trials);
    // Sampling with repetition differs from the graph model by at most C(k,2)/n.
    EXPECT_LE(std::abs(static_cast<double>(counts[f.mask()]) / trials - expected), 4 * sigma + 3.0 / 12);
    EXPECT_LE(std::abs(static_cast<double>(counts[f.mask()]) / trials - t_orderon(f, w).value),
              4 * std::sqrt(t_orderon(f, w).value * (1 - t_orderon(f, w).value) / trials) + 1e-12);
  }
}

TEST(Gnp, SpecExamples) {
  EXPECT_EQ(gnp(40, 0.0, 1).edge_count(), 0);
  EXPECT_EQ(gnp(40, 1.0, 1).edge_count(), 40 * 39 / 2);
  const double pairs = 500.0 * 499 / 2, p = 0.37;
  const int edges = gnp(500, p, 11).edge_count();
  EXPECT_LE(std::abs(edges - p * pairs), 4 * std::sqrt(pairs * p * (1 - p)));
  EXPECT_THROW(gnp(5, 1.5, 1), Error);
}

TEST(Sbm, Validation) {
  EXPECT_THROW(SbmSpec({{0.5, 0.2}, {0.3, 0.5}}), Error);
  EXPECT_THROW(SbmSpec({{0.5}}, {0.7}), Error);
  EXPECT_THROW(SbmSpec(std::vector<std::vector<double>>{{1.5}}), Error);
  EXPECT_THROW(SbmSpec({}), Error);
  const SbmSpec s = SbmSpec::staircase(4);
  EXPECT_EQ(s.p(0, 3), 1.0);
  EXPECT_EQ(s.p(0, 2), 0.0);
  EXPECT_EQ(s.p(1, 2), 1.0);
  EXPECT_DOUBLE_EQ(s.q()[2], 0.25);
}

TEST(Sbm, OneBlockIsGnp) {
  const SbmSpec one(std::vector<std::vector<double>>{{0.5}});
  const int trials = 10000;
  std::vector<long> sbm(8, 0), er(8, 0);
  for (int t = 0; t < trials; ++t) {
    ++sbm[pattern_index(sbm_consecutive(3, one, derive_seed(1, t)))];
    ++er[pattern_index(gnp(3, 0.5, derive_seed(2, t)))];
  }
  const auto [stat, df] = two_sample_chi2(sbm, er);
  ASSERT_EQ(df, 7);
  EXPECT_LT(stat, kChi2Df7);
}

TEST(Sbm, BlockSizesAreMultinomial) {
  const SbmSpec spec({{0.1, 0.2, 0.3}, {0.2, 0.4, 0.5}, {0.3, 0.5, 0.6}}, {0.2, 0.3, 0.5});
  const int n = 2000, reps = 200;
  std::vector<double> mean(3, 0.0);
  for (int r = 0; r < reps; ++r) {
    const auto sizes = sbm_block_sizes(n, spec, derive_seed(3, r));
    EXPECT_EQ(sizes[0] + sizes[1] + sizes[2], n);
    for (int b = 0; b < 3; ++b) mean[b] += static_cast<double>(sizes[b]) / reps;
  }
  for (int b = 0; b < 3; ++b) {
    const double q = spec.q()[b];
    EXPECT_LE(std::abs(mean[b] - n * q), 4 * std::sqrt(n * q * (1 - q) / reps));
  }
  const auto exact = sbm_block_sizes(n, spec, 0, true);
  EXPECT_EQ(exact, (std::vector<int>{400, 600, 1000}));
}

TEST(Sbm, BlocksAreConsecutive) {
  // Blocks 0 and 2 are cliques, everything else empty.
  const SbmSpec spec({{1, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  const auto sizes = sbm_block_sizes(60, spec, 8, true);
  const OrderedGraph g = sbm_consecutive(60, spec, 8, true);
  const int a = sizes[0], c = sizes[0] + sizes[1];
  for (int i = 0; i < 60; ++i)
    for (int j = i + 1; j < 60; ++j) EXPECT_EQ(g.has_edge(i, j), (j < a) || (i >= c));
}

TEST(Sbm, StaircaseIsFarFromThreshold) {
  const OrderedGraph g = sbm_consecutive(2000, SbmSpec::staircase(16), 21);
  EXPECT_GE(dist_threshold(g).distance, 0.45);
}

}  // namespace
}  // namespace orderon
