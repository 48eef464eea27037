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
#include <numeric>

#include "helpers.hpp"
#include "orderon/error.hpp"
#include "orderon/graph.hpp"
#include "orderon/grid.hpp"
#include "orderon/property.hpp"
#include "orderon/shift_map.hpp"

namespace orderon {
namespace {

using testing::random_graph;
using testing::random_orderon;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kBadArgument;
}

TEST(OrderedGraph, BasicsAndValidation) {
  OrderedGraph g(4);
  g.set_edge(0, 2, true);
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_EQ(code_of([&] { g.set_edge(1, 1, true); }), ErrorCode::kBadGraph);
  EXPECT_EQ(code_of([] { OrderedGraph(0); }), ErrorCode::kBadGraph);
  const std::vector<int> keep{0, 2, 3};
  const OrderedGraph h = g.induced(keep);
  EXPECT_EQ(h.size(), 3);
  EXPECT_TRUE(h.has_edge(0, 1));
  EXPECT_EQ(h.edge_count(), 1);
}

TEST(OddClique, SpecExamples) {
  EXPECT_EQ(odd_clique(1).size(), 2);
  EXPECT_EQ(odd_clique(1).edge_count(), 0);
  const OrderedGraph h2 = odd_clique(2);
  EXPECT_EQ(h2.size(), 4);
  ASSERT_EQ(h2.edge_count(), 1);
  EXPECT_TRUE(h2.has_edge(0, 2));  // (1,3) in 1-based labels
  const auto e3 = odd_clique(3).edges();
  const std::vector<std::pair<int, int>> expected{{0, 2}, {0, 4}, {2, 4}};
  EXPECT_EQ(e3, expected);
}

TEST(PatternGraph, ColexBitsAndEnumeration) {
  EXPECT_EQ(PatternGraph::pair_bit(0, 1), 0);
  EXPECT_EQ(PatternGraph::pair_bit(0, 2), 1);
  EXPECT_EQ(PatternGraph::pair_bit(1, 2), 2);
  EXPECT_EQ(PatternGraph::pair_bit(0, 3), 3);
  EXPECT_EQ(PatternGraph::all(3).size(), 8u);
  EXPECT_EQ(PatternGraph::complete(4).edge_count(), 6);
  const PatternGraph f = PatternGraph::from_graph(odd_clique(2));
  EXPECT_TRUE(f.has_edge(0, 2));
  EXPECT_EQ(f.to_graph(), odd_clique(2));
  EXPECT_EQ(code_of([] { PatternGraph(9, 0); }), ErrorCode::kBadPattern);
}

TEST(GridOrderon, ConstantAndOddCliqueLimit) {
  const GridOrderon c = build_grid_orderon({0.0, 1.0}, {{0.0, 1.0}}, {{0.5}});
  EXPECT_DOUBLE_EQ(c.evaluate(0.3, 0.9, 0.7, 0.1), 0.5);
  const GridOrderon w = odd_clique_limit();
  EXPECT_EQ(w.num_cells(), 2);
  EXPECT_EQ(w.evaluate(0.1, 0.2, 0.9, 0.4), 1.0);
  EXPECT_EQ(w.evaluate(0.1, 0.2, 0.9, 0.6), 0.0);
  EXPECT_EQ(w.evaluate(0.1, 0.7, 0.9, 0.6), 0.0);
  EXPECT_DOUBLE_EQ(w.mean(), 0.25);
}

TEST(GridOrderon, ValidationErrors) {
  EXPECT_EQ(code_of([] { build_grid_orderon({0.0, 0.5, 1.0}, {{0.0, 1.0}, {0.0, 1.0}}, {{0.0, 0.2}, {0.3, 0.0}}); }),
            ErrorCode::kAsymmetricValues);
  EXPECT_EQ(code_of([] { build_grid_orderon({0.0, 1.0}, {{0.0, 1.0}}, {{1.5}}); }), ErrorCode::kOutOfRangeValue);
  EXPECT_EQ(code_of([] { build_grid_orderon({0.0, 0.6, 0.5, 1.0}, {{0, 1}, {0, 1}, {0, 1}}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}); }),
            ErrorCode::kBadBreakpoints);
  EXPECT_EQ(code_of([] { build_grid_orderon({0.1, 1.0}, {{0.0, 1.0}}, {{0.0}}); }), ErrorCode::kBadBreakpoints);
  EXPECT_EQ(code_of([] { build_grid_orderon({0.0, 1.0}, {{0.0, 1.0}}, {{0.0, 0.0}}); }), ErrorCode::kBadBreakpoints);
}

TEST(Embed, SpecExamples) {
  OrderedGraph k2(2);
  k2.set_edge(0, 1, true);
  const GridOrderon w = embed(k2);
  EXPECT_EQ(w.grid().num_columns(), 2);
  EXPECT_EQ(w.value(0, 0), 0.0);
  EXPECT_EQ(w.value(0, 1), 1.0);
  EXPECT_EQ(w.value(1, 1), 0.0);
  EXPECT_EQ(block_index(4, 0.5), 2);
  EXPECT_EQ(block_index(4, 0.0), 1);
  EXPECT_EQ(block_index(4, 1.0), 4);
  EXPECT_EQ(block_index(4, 0.25), 1);
  // The embedding's columns follow the same right-closed convention.
  EXPECT_EQ(embed(odd_clique(2)).grid().locate_column(0.5), 1);
  EXPECT_EQ(embed(odd_clique(2)).grid().locate_column(0.0), 0);
  const GridOrderon h = embed(odd_clique(2));
  EXPECT_EQ(h.grid().num_columns(), 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(h.value(i, j), ((i == 0 && j == 2) || (i == 2 && j == 0)) ? 1.0 : 0.0);
}

TEST(Embed, PointwiseMatchesGraph) {
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 3 + trial * 3;
    const OrderedGraph g = random_graph(n, 0.5, rng);
    const GridOrderon w = embed(g);
    for (int s = 0; s < 1000; ++s) {
      const double x = rng.uniform(), y = rng.uniform();
      // Q_n(z) = ceil(nz) with Q_n(0) = 1, shifted to 0-based.
      const int qx = std::max(1, static_cast<int>(std::ceil(n * x))) - 1;
      const int qy = std::max(1, static_cast<int>(std::ceil(n * y))) - 1;
      const double expected = qx != qy && g.has_edge(qx, qy) ? 1.0 : 0.0;
      ASSERT_EQ(w.evaluate(x, rng.uniform(), y, rng.uniform()), expected);
    }
  }
}

TEST(Embed, Weighted) {
  WeightedOrderedGraph g(3);
  g.set_weight(0, 1, 0.25);
  g.set_weight(2, 2, 0.5);
  const GridOrderon w = embed(g);
  EXPECT_EQ(w.value(1, 0), 0.25);
  EXPECT_EQ(w.value(2, 2), 0.5);
}

TEST(CommonRefinement, SpecExamples) {
  Rng rng(3);
  const GridOrderon w = random_orderon(rng);
  const auto [a, b] = common_refinement(w, w);
  EXPECT_EQ(a.grid(), w.grid());
  EXPECT_EQ(b.grid(), w.grid());

  const GridOrderon half = GridOrderon(Grid::uniform(2), {0.1, 0.2, 0.2, 0.3});
  const GridOrderon third = GridOrderon(Grid::uniform(3), std::vector<double>(9, 0.4));
  const auto [x, y] = common_refinement(half, third);
  const std::vector<double> expected{0.0, 1.0 / 3, 0.5, 2.0 / 3, 1.0};
  ASSERT_EQ(x.grid().xcuts().size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(x.grid().xcuts()[i], expected[i], 1e-15);
  EXPECT_EQ(x.grid(), y.grid());
}

TEST(CommonRefinement, PreservesFunctionPointwise) {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const GridOrderon w = random_orderon(rng), u = random_orderon(rng);
    const auto [a, b] = common_refinement(w, u);
    for (int s = 0; s < 1000; ++s) {
      const double x = rng.uniform(), p = rng.uniform(), y = rng.uniform(), q = rng.uniform();
      ASSERT_EQ(a.evaluate(x, p, y, q), w.evaluate(x, p, y, q));
      ASSERT_EQ(b.evaluate(x, p, y, q), u.evaluate(x, p, y, q));
    }
  }
}

TEST(Grid, CellMeasuresSumToOne) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Grid g = testing::random_grid(rng, 40);
    const double total = std::accumulate(g.cell_measures().begin(), g.cell_measures().end(), 0.0);
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
  const Grid r = refine_columns(Grid::uniform(3), 7);
  EXPECT_EQ(r.num_columns(), 9);  // cuts at thirds and sevenths, 0 and 1 shared
}

TEST(Grid, RefineToKeepsValues) {
  Rng rng(9);
  const GridOrderon w = random_orderon(rng);
  const Grid target = common_grid(w.grid(), Grid::uniform(5));
  const GridOrderon r = refine_to(w, target);
  for (int s = 0; s < 500; ++s) {
    const double x = rng.uniform(), p = rng.uniform(), y = rng.uniform(), q = rng.uniform();
    ASSERT_EQ(r.evaluate(x, p, y, q), w.evaluate(x, p, y, q));
  }
}

TEST(Blowup, StructureMatchesDefinition) {
  const OrderedGraph g = odd_clique(2);
  const OrderedGraph b = blowup(g, 3);
  ASSERT_EQ(b.size(), 12);
  for (int u = 0; u < 12; ++u)
    for (int v = u + 1; v < 12; ++v) EXPECT_EQ(b.has_edge(u, v), u / 3 != v / 3 && g.has_edge(u / 3, v / 3));
}

TEST(ShiftMap, CostAndValidation) {
  EXPECT_EQ(ShiftMap::identity(5).shift_cost(), 0.0);
  EXPECT_DOUBLE_EQ(ShiftMap::column_permutation({1, 0, 2, 3}).shift_cost(), 0.25);
  EXPECT_DOUBLE_EQ(ShiftMap::column_permutation({3, 1, 2, 0}).shift_cost(), 0.75);
  // Layer moves are vertical and cost nothing.
  const ShiftMap v = ShiftMap::with_layer_moves({0, 1}, {{{0.0, 0.5, 0.5, 1.0}, {0.5, 1.0, 0.0, 0.5}}, {}});
  EXPECT_EQ(v.shift_cost(), 0.0);
  const auto [x, a] = v(0.25, 0.25);
  EXPECT_DOUBLE_EQ(x, 0.25);
  EXPECT_DOUBLE_EQ(a, 0.75);
  EXPECT_EQ(code_of([] { ShiftMap::column_permutation({0, 0}); }), ErrorCode::kBadShiftMap);
  EXPECT_EQ(code_of([] { ShiftMap::with_layer_moves({0}, {{{0.0, 0.5, 0.0, 0.4}}}); }), ErrorCode::kBadShiftMap);
  EXPECT_EQ(code_of([] { compose(ShiftMap::identity(2), ShiftMap::identity(3)); }), ErrorCode::kIncompatibleResolution);
}

TEST(ShiftMap, InverseAndComposition) {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int r = 1 + static_cast<int>(rng.below(6));
    const ShiftMap f = testing::random_shift_map(r, rng), g = testing::random_shift_map(r, rng);
    const ShiftMap fg = compose(f, g);
    EXPECT_LE(fg.shift_cost(), f.shift_cost() + g.shift_cost() + 1e-12);
    const ShiftMap inv = f.inverse();
    EXPECT_DOUBLE_EQ(inv.shift_cost(), f.shift_cost());
    for (int s = 0; s < 200; ++s) {
      const double x = rng.uniform(), a = rng.uniform();
      const auto [gx, ga] = g(x, a);
      const auto [fx, fa] = f(gx, ga);
      const auto [cx, ca] = fg(x, a);
      ASSERT_NEAR(cx, fx, 1e-9);
      ASSERT_NEAR(ca, fa, 1e-9);
      const auto [bx, ba] = inv(f(x, a).first, f(x, a).second);
      ASSERT_NEAR(bx, x, 1e-9);
      ASSERT_NEAR(ba, a, 1e-9);
    }
  }
}

TEST(PropertySpec, Validation) {
  EXPECT_EQ(code_of([] { PropertySpec::forbidden({}); }), ErrorCode::kBadSpec);
  EXPECT_EQ(code_of([] { PropertySpec::forbidden({PatternGraph::empty(1)}); }), ErrorCode::kBadSpec);
  const PropertySpec t = PropertySpec::threshold();
  EXPECT_EQ(t.kind(), PropertySpec::Kind::kThreshold);
  EXPECT_EQ(t.patterns().size(), 18u);
  EXPECT_EQ(t.max_pattern_size(), 4);
}

}  // namespace
}  // namespace orderon
