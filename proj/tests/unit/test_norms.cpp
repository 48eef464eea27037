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

#include "helpers.hpp"
#include "orderon/error.hpp"
#include "orderon/norms.hpp"

namespace orderon {
namespace {

using testing::brute_cut_norm;
using testing::random_kernel;
using testing::random_kernel_cells;
using testing::random_orderon;

StepKernel constant_kernel(double c, int columns = 3) {
  const int n = columns;
  return StepKernel(Grid::uniform(columns), std::vector<double>(static_cast<std::size_t>(n) * n, c));
}

void expect_witness_reproduces(const StepKernel& d, const NormCertificate& c) {
  const StepKernel& base = d;
  const double v = c.ordered ? ordered_cut_value(refine_for_order(base, c.depth), c.witness_s, c.witness_t)
                             : cut_value(base, c.witness_s, c.witness_t);
  EXPECT_NEAR(std::abs(v), c.value, 1e-12);
}

TEST(StepKernel, Validation) {
  EXPECT_THROW(StepKernel(Grid::uniform(1), {1.5}), Error);
  EXPECT_THROW(StepKernel(Grid::uniform(2), {0.0, 0.1, 0.2, 0.0}), Error);
  EXPECT_THROW(StepKernel(Grid::uniform(2), {0.0}), Error);
}

TEST(CutNormExact, SpecExamples) {
  for (double c : {-0.7, 0.0, 0.4}) {
    const auto cert = cut_norm_exact(constant_kernel(c));
    EXPECT_NEAR(cert.value, std::abs(c), 1e-15);
    if (c != 0.0) {
      EXPECT_EQ(cert.witness_s.size(), 3u);
      EXPECT_EQ(cert.witness_t.size(), 3u);
    }
    EXPECT_EQ(cert.exactness, Exactness::kExact);
  }
  Rng rng(2);
  const GridOrderon w = random_orderon(rng);
  EXPECT_EQ(cut_norm_exact(StepKernel::difference(w, w)).value, 0.0);
}

TEST(CutNormExact, OddCliqueGapMeasured) {
  // Measured value of the finite-n gap; the limit as n grows is 3/16.
  const auto d = StepKernel::difference(embed(odd_clique(4)), embed(odd_clique(8)));
  EXPECT_EQ(d.num_cells(), 16);
  EXPECT_NEAR(cut_norm_exact(d).value, 11.0 / 64, 1e-12);
  // The same routine against two-sided brute force on the small members.
  for (int n : {1, 2}) {
    const auto small = StepKernel::difference(embed(odd_clique(n)), embed(odd_clique(2 * n)));
    EXPECT_NEAR(cut_norm_exact(small).value, brute_cut_norm(small), 1e-12);
    EXPECT_NEAR(cut_norm_exact(small).value, 3.0 / 16 - 1.0 / (16 * n), 1e-12);
  }
}

TEST(CutNormExact, MatchesTwoSidedBruteForce) {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const StepKernel d = random_kernel_cells(1 + static_cast<int>(rng.below(8)), rng);
    const auto cert = cut_norm_exact(d);
    EXPECT_NEAR(cert.value, brute_cut_norm(d), 1e-12);
    expect_witness_reproduces(d, cert);
  }
}

TEST(CutNormExact, TooManyCells) {
  try {
    cut_norm_exact(constant_kernel(0.1, 25));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooManyCells);
  }
}

TEST(CutNormExact, DeterministicWitness) {
  Rng rng(6);
  const StepKernel d = random_kernel(rng);
  const auto a = cut_norm_exact(d), b = cut_norm_exact(d);
  EXPECT_EQ(a.witness_s, b.witness_s);
  EXPECT_EQ(a.witness_t, b.witness_t);
}

TEST(CutNormHeuristic, MatchesExactOnSmallKernels) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const StepKernel d = random_kernel(rng, 12);
    const auto exact = cut_norm_exact(d);
    const auto heur = cut_norm_heuristic(d, 16, 1000 + trial);
    EXPECT_NEAR(heur.value, exact.value, 1e-12) << "trial " << trial;
    EXPECT_EQ(heur.exactness, Exactness::kLowerBound);
    expect_witness_reproduces(d, heur);
  }
}

TEST(CutNormHeuristic, ConstantAndMonotoneInRestarts) {
  EXPECT_NEAR(cut_norm_heuristic(constant_kernel(-0.3), 0, 1).value, 0.3, 1e-15);
  Rng rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const StepKernel d = random_kernel_cells(30, rng);
    double previous = 0.0;
    for (int restarts : {0, 1, 2, 4, 8, 16}) {
      const double v = cut_norm_heuristic(d, restarts, 77).value;
      EXPECT_GE(v, previous - 1e-15);
      previous = v;
    }
    EXPECT_LE(previous, cut_norm_upper_bound(d).value + 1e-12);
  }
}

TEST(CutNormUpperBound, DominatesExact) {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const StepKernel d = random_kernel(rng);
    const auto ub = cut_norm_upper_bound(d);
    EXPECT_EQ(ub.exactness, Exactness::kUpperBound);
    EXPECT_GE(ub.value, cut_norm_exact(d).value - 1e-15);
  }
}

TEST(OrderedCutNorm, ConstantKernelIsHalf) {
  for (int depth = 0; depth <= 3; ++depth) {
    const auto cert = ordered_cut_norm(constant_kernel(0.6, 2), depth);
    EXPECT_NEAR(cert.value, 0.3, 1e-12) << depth;
    EXPECT_EQ(cert.depth, depth);
    EXPECT_TRUE(cert.ordered);
  }
}

TEST(OrderedCutNorm, NondecreasingInDepthAndReproducible) {
  Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const StepKernel d = random_kernel(rng, 8);
    double previous = 0.0;
    for (int depth = 0; depth <= 4; ++depth) {
      const auto cert = ordered_cut_norm(d, depth, 4, 5);
      EXPECT_GE(cert.value, previous - 1e-12);
      previous = cert.value;
      expect_witness_reproduces(d, cert);
    }
  }
}

TEST(OrderedCutNorm, SandwichLowerDirection) {
  Rng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const StepKernel d = random_kernel(rng, 12);
    const double ordered = ordered_cut_norm(d, 4, 4, trial).value;
    EXPECT_LE(ordered * ordered / 4, cut_norm_exact(d).value + 1e-12);
  }
}

TEST(OrderedCutNorm, AtLeastHalfTheCutNorm) {
  Rng rng(18);
  for (int trial = 0; trial < 20; ++trial) {
    const StepKernel d = random_kernel(rng, 8);
    EXPECT_LE(cut_norm_exact(d).value, 2 * ordered_cut_norm(d, 2, 4, trial).value + 1e-12);
  }
}

TEST(OrderedCutNorm, DepthTooLarge) {
  try {
    ordered_cut_norm(constant_kernel(0.1, 9), 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDepthTooLarge);
  }
}

// Step weights mu, nu on the depth-refined cells: the integral of
// mu(v1) nu(v2) D 1[x1 <= x2] is a convex combination of ordered cut values
// of cell unions, so it is bounded by the best such union plus slack.
TEST(OrderedCutNorm, SmoothingBound) {
  Rng rng(20);
  const int depth = 2;
  for (int trial = 0; trial < 50; ++trial) {
    const StepKernel d = random_kernel(rng, 6);
    const StepKernel fine = refine_for_order(d, depth);
    const int n = fine.num_cells();
    std::vector<double> mu(n), nu(n);
    for (int i = 0; i < n; ++i) {
      mu[i] = rng.uniform();
      nu[i] = rng.uniform();
    }
    double integral = 0.0;
    const Grid& g = fine.grid();
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        const int cs = g.column_of(s), ct = g.column_of(t);
        const double order = cs < ct ? 1.0 : (cs > ct ? 0.0 : 0.5);
        integral += mu[s] * nu[t] * fine.value(s, t) * order * g.cell_measure(s) * g.cell_measure(t);
      }
    double max_measure = 0.0;
    for (double m : g.cell_measures()) max_measure = std::max(max_measure, m);
    EXPECT_LE(std::abs(integral), ordered_cut_norm(d, depth, 8, trial).value + 2 * max_measure);
  }
}

TEST(CutNorm, SwappingRolesGivesSameValue) {
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const StepKernel d = random_kernel(rng);
    const auto c = cut_norm_exact(d);
    EXPECT_NEAR(std::abs(cut_value(d, c.witness_t, c.witness_s)), c.value, 1e-12);
  }
}

TEST(L1Distance, SpecExamples) {
  Rng rng(24);
  const GridOrderon w = random_orderon(rng);
  EXPECT_EQ(l1_distance(w, w), 0.0);
  EXPECT_NEAR(l1_distance(GridOrderon::constant(0.2), GridOrderon::constant(0.7)), 0.5, 1e-15);
  const auto [a, b] = common_refinement(w, random_orderon(rng));
  EXPECT_NEAR(l1_distance(w, a), 0.0, 1e-15);
  for (int trial = 0; trial < 50; ++trial) {
    const GridOrderon x = random_orderon(rng), y = random_orderon(rng);
    EXPECT_LE(cut_norm_exact(StepKernel::difference(x, y)).value, l1_distance(x, y) + 1e-12);
  }
}

}  // namespace
}  // namespace orderon
