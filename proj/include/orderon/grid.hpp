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

#include <span>
#include <utility>
#include <vector>

#include "orderon/graph.hpp"

namespace orderon {

/// Axis-aligned rectangle [x0,x1] x [a0,a1] in the unit square.
struct Rect {
  double x0 = 0, x1 = 1, a0 = 0, a1 = 1;

  double width() const noexcept { return x1 - x0; }
  double height() const noexcept { return a1 - a0; }
  double area() const noexcept { return width() * height(); }
};

/// Breakpoints closer than this are treated as the same cut when grids are
/// merged, so exact rationals computed along different routes coincide.
inline constexpr double kBreakpointTolerance = 1e-12;

/// Column x layer partition of the unit square.
///
/// Columns are the intervals between consecutive xcuts; column c carries its
/// own layer breakpoints. Cells are numbered column-major, then by layer.
/// Point location uses right-closed intervals (x_{c-1}, x_c], with 0 falling
/// in the first interval, which matches Q_n(z) = ceil(n z), Q_n(0) = 1.
class Grid {
 public:
  Grid(std::vector<double> xcuts, std::vector<std::vector<double>> layers);

  /// m equal-width columns, one layer each.
  static Grid uniform(int columns);

  int num_columns() const noexcept { return static_cast<int>(layers_.size()); }
  int num_cells() const noexcept { return static_cast<int>(cell_column_.size()); }
  int num_layers(int column) const noexcept { return static_cast<int>(layers_[column].size()) - 1; }

  std::span<const double> xcuts() const noexcept { return xcuts_; }
  std::span<const double> layers(int column) const noexcept { return layers_[column]; }

  int cell_index(int column, int layer) const noexcept { return offsets_[column] + layer; }
  int column_of(int cell) const noexcept { return cell_column_[cell]; }
  int layer_of(int cell) const noexcept { return cell - offsets_[cell_column_[cell]]; }

  double column_width(int column) const noexcept { return xcuts_[column + 1] - xcuts_[column]; }
  double cell_measure(int cell) const noexcept { return measures_[cell]; }
  std::span<const double> cell_measures() const noexcept { return measures_; }
  Rect cell_rect(int cell) const noexcept;

  int locate_column(double x) const noexcept;
  int locate(double x, double a) const noexcept;

  friend bool operator==(const Grid& lhs, const Grid& rhs) {
    return lhs.xcuts_ == rhs.xcuts_ && lhs.layers_ == rhs.layers_;
  }

 private:
  std::vector<double> xcuts_;
  std::vector<std::vector<double>> layers_;
  std::vector<int> offsets_;
  std::vector<int> cell_column_;
  std::vector<double> measures_;
};

/// Coarsest grid refining both inputs: union of x cuts, and per column the
/// union of the layer cuts of the input columns covering it.
/// Sorted union of two breakpoint lists; points closer than
/// kBreakpointTolerance are merged and the ends are pinned to 0 and 1.
std::vector<double> merge_cuts(std::span<const double> a, std::span<const double> b);

Grid common_grid(const Grid& a, const Grid& b);

/// Grid refining `g` whose columns are additionally cut at i / resolution.
Grid refine_columns(const Grid& g, int resolution);

/// Step orderon: a symmetric [0,1]-valued tensor over pairs of grid cells.
class GridOrderon {
 public:
  /// Validates range and symmetry (kOutOfRangeValue, kAsymmetricValues).
  /// `values` is row-major over num_cells() x num_cells().
  GridOrderon(Grid grid, std::vector<double> values);

  static GridOrderon constant(double p);

  const Grid& grid() const noexcept { return grid_; }
  int num_cells() const noexcept { return grid_.num_cells(); }
  double value(int i, int j) const noexcept {
    return values_[static_cast<std::size_t>(i) * static_cast<std::size_t>(grid_.num_cells()) + static_cast<std::size_t>(j)];
  }
  std::span<const double> values() const noexcept { return values_; }

  /// W((x,a),(y,b)).
  double evaluate(double x, double a, double y, double b) const noexcept {
    return value(grid_.locate(x, a), grid_.locate(y, b));
  }

  /// Integral of W over the whole domain.
  double mean() const noexcept;

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// Validating constructor from nested value rows (kBadBreakpoints,
/// kAsymmetricValues, kOutOfRangeValue).
GridOrderon build_grid_orderon(std::vector<double> xcuts, std::vector<std::vector<double>> layers,
                               const std::vector<std::vector<double>>& values);

/// Re-expresses W on `target`, which must refine W's grid.
GridOrderon refine_to(const GridOrderon& w, const Grid& target);

/// Both inputs on their common grid, each unchanged as a function.
std::pair<GridOrderon, GridOrderon> common_refinement(const GridOrderon& w, const GridOrderon& u);

/// Naive block orderon W_G: n equal columns, one layer, cell pair (i,j)
/// carrying G(i,j). The diagonal of a simple graph is 0.
GridOrderon embed(const OrderedGraph& g);
GridOrderon embed(const WeightedOrderedGraph& g);

/// Q_n(z) = ceil(n z) with Q_n(0) = 1 (1-based block index).
/// Limit of the odd-clique sequence: one column, layers {0, 1/2, 1}, value 1
/// exactly when both points lie in the lower layer.
GridOrderon odd_clique_limit();

int block_index(int n, double z) noexcept;

}  // namespace orderon
