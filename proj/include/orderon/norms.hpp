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
#include <vector>

#include "orderon/grid.hpp"

namespace orderon {

/// Symmetric step function with values in [-1,1], typically W - U on a
/// common grid.
class StepKernel {
 public:
  StepKernel(Grid grid, std::vector<double> values);

  /// W - U on the common refinement of the two grids.
  static StepKernel difference(const GridOrderon& w, const GridOrderon& u);

  const Grid& grid() const noexcept { return grid_; }
  int num_cells() const noexcept { return grid_.num_cells(); }
  double value(int i, int j) const noexcept {
    return values_[static_cast<std::size_t>(i) * static_cast<std::size_t>(grid_.num_cells()) + static_cast<std::size_t>(j)];
  }
  std::span<const double> values() const noexcept { return values_; }

 private:
  Grid grid_;
  std::vector<double> values_;
};

enum class Exactness { kExact, kLowerBound, kUpperBound };

/// A norm value with the cell sets realizing it. Witness cells index
/// `grid`, which for ordered norms is the column-refined grid.
struct NormCertificate {
  double value = 0.0;
  std::vector<int> witness_s;
  std::vector<int> witness_t;
  Exactness exactness = Exactness::kExact;
  bool ordered = false;
  int depth = 0;
  Grid grid = Grid::uniform(1);
};

inline constexpr int kExactCellCap = 24;
inline constexpr int kOrderedCellCap = 2048;

/// Integral of D over S x T.
double cut_value(const StepKernel& d, std::span<const int> s, std::span<const int> t);

/// Integral of D(v1,v2) 1[x1 <= x2] over S x T. Cells in the same column
/// contribute half their mass.
double ordered_cut_value(const StepKernel& d, std::span<const int> s, std::span<const int> t);

/// Exact cut norm by enumerating all cell subsets S (T is then the set of
/// cells whose column sum has the favourable sign). kTooManyCells above
/// `max_cells`. Ties go to the numerically smallest S bitmask.
NormCertificate cut_norm_exact(const StepKernel& d, int max_cells = kExactCellCap);

/// Lower bound from alternating best responses (S given T, T given S) from
/// the all-cells start, the positive-row start and `restarts` random starts.
NormCertificate cut_norm_heuristic(const StepKernel& d, int restarts, std::uint64_t seed);

/// max(integral of D+, integral of D-): a certified upper bound.
NormCertificate cut_norm_upper_bound(const StepKernel& d);

/// Each column cut into 2^depth equal sub-columns.
StepKernel refine_for_order(const StepKernel& d, int depth);

/// Lower bound on the ordered cut norm over unions of cells of
/// refine_for_order(D, depth). Computed as a ladder over depths 0..depth,
/// each level warm-started from the previous one and from the unordered
/// witness, so the value never decreases with depth. Levels with at most
/// 16 cells are solved exhaustively. kDepthTooLarge when the
/// refined grid exceeds kOrderedCellCap cells.
NormCertificate ordered_cut_norm(const StepKernel& d, int depth, int restarts = 8, std::uint64_t seed = 0);

/// Integral of |W - U|, cell-exact on the common refinement.
double l1_distance(const GridOrderon& w, const GridOrderon& u);

}  // namespace orderon
