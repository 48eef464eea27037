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

#include "orderon/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orderon/error.hpp"

namespace orderon {
namespace {

void check_breakpoints(std::span<const double> cuts, const char* what) {
  if (cuts.size() < 2) throw Error(ErrorCode::kBadBreakpoints, std::string(what) + " needs at least two breakpoints");
  if (cuts.front() != 0.0 || cuts.back() != 1.0) {
    throw Error(ErrorCode::kBadBreakpoints, std::string(what) + " must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    if (!(cuts[i] > cuts[i - 1])) {
      throw Error(ErrorCode::kBadBreakpoints, std::string(what) + " must be strictly increasing (index " +
                                                  std::to_string(i) + ")");
    }
  }
}

int locate_in(std::span<const double> cuts, double z) noexcept {
  const int intervals = static_cast<int>(cuts.size()) - 1;
  const auto it = std::lower_bound(cuts.begin() + 1, cuts.end(), z);
  const int idx = static_cast<int>(it - (cuts.begin() + 1));
  return std::clamp(idx, 0, intervals - 1);
}

}  // namespace

std::vector<double> merge_cuts(std::span<const double> a, std::span<const double> b) {
  std::vector<double> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  out.reserve(all.size());
  for (double v : all) {
    if (out.empty() || v - out.back() > kBreakpointTolerance) out.push_back(v);
  }
  out.front() = 0.0;
  if (out.size() >= 2 && 1.0 - out[out.size() - 2] <= kBreakpointTolerance) out.pop_back();
  out.back() = 1.0;
  return out;
}

Grid::Grid(std::vector<double> xcuts, std::vector<std::vector<double>> layers)
    : xcuts_(std::move(xcuts)), layers_(std::move(layers)) {
  check_breakpoints(xcuts_, "xcuts");
  if (layers_.size() + 1 != xcuts_.size()) {
    throw Error(ErrorCode::kBadBreakpoints, "need one layer list per column (" + std::to_string(xcuts_.size() - 1) +
                                                " columns, " + std::to_string(layers_.size()) + " layer lists)");
  }
  offsets_.reserve(layers_.size());
  for (std::size_t c = 0; c < layers_.size(); ++c) {
    check_breakpoints(layers_[c], "layers");
    offsets_.push_back(static_cast<int>(cell_column_.size()));
    const double width = xcuts_[c + 1] - xcuts_[c];
    for (std::size_t p = 0; p + 1 < layers_[c].size(); ++p) {
      cell_column_.push_back(static_cast<int>(c));
      measures_.push_back(width * (layers_[c][p + 1] - layers_[c][p]));
    }
  }
}

Grid Grid::uniform(int columns) {
  if (columns < 1) throw Error(ErrorCode::kBadBreakpoints, "need at least one column");
  std::vector<double> xs(static_cast<std::size_t>(columns) + 1);
  for (int i = 0; i <= columns; ++i) xs[i] = static_cast<double>(i) / columns;
  return Grid(std::move(xs), std::vector<std::vector<double>>(columns, {0.0, 1.0}));
}

Rect Grid::cell_rect(int cell) const noexcept {
  const int c = column_of(cell);
  const int p = layer_of(cell);
  return Rect{xcuts_[c], xcuts_[c + 1], layers_[c][p], layers_[c][p + 1]};
}

int Grid::locate_column(double x) const noexcept { return locate_in(xcuts_, x); }

int Grid::locate(double x, double a) const noexcept {
  const int c = locate_column(x);
  return offsets_[c] + locate_in(layers_[c], a);
}

Grid common_grid(const Grid& a, const Grid& b) {
  std::vector<double> xs = merge_cuts(a.xcuts(), b.xcuts());
  std::vector<std::vector<double>> layers;
  layers.reserve(xs.size() - 1);
  for (std::size_t c = 0; c + 1 < xs.size(); ++c) {
    const double mid = 0.5 * (xs[c] + xs[c + 1]);
    layers.push_back(merge_cuts(a.layers(a.locate_column(mid)), b.layers(b.locate_column(mid))));
  }
  return Grid(std::move(xs), std::move(layers));
}

Grid refine_columns(const Grid& g, int resolution) { return common_grid(g, Grid::uniform(resolution)); }

GridOrderon::GridOrderon(Grid grid, std::vector<double> values) : grid_(std::move(grid)), values_(std::move(values)) {
  const auto n = static_cast<std::size_t>(grid_.num_cells());
  if (values_.size() != n * n) {
    throw Error(ErrorCode::kBadBreakpoints, "value tensor has " + std::to_string(values_.size()) + " entries, grid has " +
                                                std::to_string(n) + " cells");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = values_[i * n + j];
      if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorCode::kOutOfRangeValue, "value at cell pair (" + std::to_string(i) + "," + std::to_string(j) +
                                                     ") is outside [0,1]");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double& lo = values_[i * n + j];
      double& hi = values_[j * n + i];
      if (std::abs(lo - hi) > 1e-12) {
        throw Error(ErrorCode::kAsymmetricValues, "values(" + std::to_string(i) + "," + std::to_string(j) +
                                                      ") != values(" + std::to_string(j) + "," + std::to_string(i) + ")");
      }
      lo = hi = 0.5 * (lo + hi);
    }
  }
}

GridOrderon GridOrderon::constant(double p) { return GridOrderon(Grid::uniform(1), {p}); }

double GridOrderon::mean() const noexcept {
  const int n = num_cells();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += value(i, j) * grid_.cell_measure(j);
    total += row * grid_.cell_measure(i);
  }
  return total;
}

GridOrderon build_grid_orderon(std::vector<double> xcuts, std::vector<std::vector<double>> layers,
                               const std::vector<std::vector<double>>& values) {
  Grid grid(std::move(xcuts), std::move(layers));
  const auto n = static_cast<std::size_t>(grid.num_cells());
  if (values.size() != n) {
    throw Error(ErrorCode::kBadBreakpoints, "value rows (" + std::to_string(values.size()) + ") != cell count (" +
                                                std::to_string(n) + ")");
  }
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& row : values) {
    if (row.size() != n) throw Error(ErrorCode::kBadBreakpoints, "value row length != cell count");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return GridOrderon(std::move(grid), std::move(flat));
}

GridOrderon refine_to(const GridOrderon& w, const Grid& target) {
  const Grid& src = w.grid();
  const int n = target.num_cells();
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    const Rect r = target.cell_rect(t);
    map[t] = src.locate(0.5 * (r.x0 + r.x1), 0.5 * (r.a0 + r.a1));
  }
  std::vector<double> values(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) values[static_cast<std::size_t>(i) * n + j] = w.value(map[i], map[j]);
  return GridOrderon(target, std::move(values));
}

std::pair<GridOrderon, GridOrderon> common_refinement(const GridOrderon& w, const GridOrderon& u) {
  Grid g = common_grid(w.grid(), u.grid());
  return {refine_to(w, g), refine_to(u, g)};
}

GridOrderon embed(const OrderedGraph& g) {
  const int n = g.size();
  std::vector<double> values(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.has_edge(i, j)) values[static_cast<std::size_t>(i) * n + j] = 1.0;
  return GridOrderon(Grid::uniform(n), std::move(values));
}

GridOrderon embed(const WeightedOrderedGraph& g) {
  const int n = g.size();
  std::vector<double> values(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) values[static_cast<std::size_t>(i) * n + j] = g.weight(i, j);
  return GridOrderon(Grid::uniform(n), std::move(values));
}

GridOrderon odd_clique_limit() {
  return build_grid_orderon({0.0, 1.0}, {{0.0, 0.5, 1.0}}, {{1.0, 0.0}, {0.0, 0.0}});
}

int block_index(int n, double z) noexcept {
  if (z <= 0.0) return 1;
  return std::clamp(static_cast<int>(std::ceil(n * z)), 1, n);
}

}  // namespace orderon
