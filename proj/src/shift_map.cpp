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

#include "orderon/shift_map.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orderon/error.hpp"

namespace orderon {
namespace {

constexpr double kTol = 1e-9;

bool inside(const Rect& inner, const Rect& outer) noexcept {
  return inner.x0 >= outer.x0 - kTol && inner.x1 <= outer.x1 + kTol && inner.a0 >= outer.a0 - kTol &&
         inner.a1 <= outer.a1 + kTol;
}

double overlap(const Rect& p, const Rect& q) noexcept {
  const double w = std::min(p.x1, q.x1) - std::max(p.x0, q.x0);
  const double h = std::min(p.a1, q.a1) - std::max(p.a0, q.a0);
  return (w > 0 && h > 0) ? w * h : 0.0;
}

Rect column_rect(int i, int r) noexcept {
  return Rect{static_cast<double>(i) / r, static_cast<double>(i + 1) / r, 0.0, 1.0};
}

void check_tiling(const std::vector<ShiftPiece>& pieces, bool source) {
  double total = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Rect& p = source ? pieces[i].src : pieces[i].dst;
    total += p.area();
    for (std::size_t j = 0; j < i; ++j) {
      const Rect& q = source ? pieces[j].src : pieces[j].dst;
      if (overlap(p, q) > kTol * 1e-3) {
        throw Error(ErrorCode::kBadShiftMap, std::string(source ? "source" : "destination") + " pieces " +
                                                 std::to_string(j) + " and " + std::to_string(i) + " overlap");
      }
    }
  }
  if (std::abs(total - 1.0) > kTol) {
    throw Error(ErrorCode::kBadShiftMap, std::string(source ? "source" : "destination") +
                                             " pieces do not cover the unit square (area " + std::to_string(total) + ")");
  }
}

}  // namespace

ShiftMap::ShiftMap(int resolution, std::vector<int> colperm, std::vector<ShiftPiece> pieces)
    : resolution_(resolution), colperm_(std::move(colperm)), pieces_(std::move(pieces)) {
  if (resolution_ < 1) throw Error(ErrorCode::kBadShiftMap, "resolution must be >= 1");
  if (static_cast<int>(colperm_.size()) != resolution_) throw Error(ErrorCode::kBadShiftMap, "colperm size != resolution");
  std::vector<char> seen(colperm_.size(), 0);
  for (int c : colperm_) {
    if (c < 0 || c >= resolution_ || seen[c]) throw Error(ErrorCode::kBadShiftMap, "colperm is not a permutation");
    seen[c] = 1;
  }
  by_column_.resize(static_cast<std::size_t>(resolution_));
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const ShiftPiece& p = pieces_[k];
    if (!(p.src.width() > 0 && p.src.height() > 0 && p.dst.width() > 0 && p.dst.height() > 0)) {
      throw Error(ErrorCode::kBadShiftMap, "degenerate piece " + std::to_string(k));
    }
    if (std::abs(p.src.area() - p.dst.area()) > kTol * std::max(p.src.area(), 1e-3)) {
      throw Error(ErrorCode::kBadShiftMap, "piece " + std::to_string(k) + " does not preserve area");
    }
    const double mid = 0.5 * (p.src.x0 + p.src.x1);
    const int col = std::clamp(static_cast<int>(std::floor(mid * resolution_)), 0, resolution_ - 1);
    if (!inside(p.src, column_rect(col, resolution_)) || !inside(p.dst, column_rect(colperm_[col], resolution_))) {
      throw Error(ErrorCode::kBadShiftMap, "piece " + std::to_string(k) + " crosses its column or ignores colperm");
    }
    by_column_[col].push_back(static_cast<int>(k));
  }
  check_tiling(pieces_, true);
  check_tiling(pieces_, false);
}

ShiftMap ShiftMap::identity(int resolution) {
  std::vector<int> perm(static_cast<std::size_t>(std::max(resolution, 0)));
  for (int i = 0; i < resolution; ++i) perm[i] = i;
  return column_permutation(std::move(perm));
}

ShiftMap ShiftMap::column_permutation(std::vector<int> colperm) {
  return with_layer_moves(std::move(colperm), {});
}

ShiftMap ShiftMap::with_layer_moves(std::vector<int> colperm, const std::vector<std::vector<LayerMove>>& moves) {
  const int r = static_cast<int>(colperm.size());
  if (r < 1) throw Error(ErrorCode::kBadShiftMap, "empty colperm");
  if (!moves.empty() && static_cast<int>(moves.size()) != r) {
    throw Error(ErrorCode::kBadShiftMap, "need one layer-move list per column");
  }
  std::vector<ShiftPiece> pieces;
  for (int i = 0; i < r; ++i) {
    if (colperm[i] < 0 || colperm[i] >= r) throw Error(ErrorCode::kBadShiftMap, "colperm entry out of range");
    const double sx0 = static_cast<double>(i) / r, sx1 = static_cast<double>(i + 1) / r;
    const double dx0 = static_cast<double>(colperm[i]) / r, dx1 = static_cast<double>(colperm[i] + 1) / r;
    if (moves.empty() || moves[i].empty()) {
      pieces.push_back({Rect{sx0, sx1, 0.0, 1.0}, Rect{dx0, dx1, 0.0, 1.0}});
      continue;
    }
    for (const LayerMove& m : moves[i]) {
      if (std::abs((m.src1 - m.src0) - (m.dst1 - m.dst0)) > kTol) {
        throw Error(ErrorCode::kBadShiftMap, "layer move changes interval length in column " + std::to_string(i));
      }
      pieces.push_back({Rect{sx0, sx1, m.src0, m.src1}, Rect{dx0, dx1, m.dst0, m.dst1}});
    }
  }
  return ShiftMap(r, std::move(colperm), std::move(pieces));
}

double ShiftMap::shift_cost() const noexcept {
  double cost = 0.0;
  for (const ShiftPiece& p : pieces_) {
    cost = std::max({cost, std::abs(p.src.x0 - p.dst.x0), std::abs(p.src.x1 - p.dst.x1)});
  }
  return cost;
}

int ShiftMap::piece_at(double x, double a) const {
  const int col = std::clamp(static_cast<int>(std::floor(x * resolution_)), 0, resolution_ - 1);
  int best = -1;
  double best_slack = -1.0;
  // Scan the column and its neighbours so points on a column boundary resolve.
  for (int c = std::max(col - 1, 0); c <= std::min(col + 1, resolution_ - 1); ++c) {
    for (int k : by_column_[c]) {
      const Rect& s = pieces_[k].src;
      const double slack = std::min({x - s.x0, s.x1 - x, a - s.a0, s.a1 - a});
      if (slack > best_slack) {
        best_slack = slack;
        best = k;
      }
    }
  }
  if (best < 0 || best_slack < -kTol) throw Error(ErrorCode::kBadShiftMap, "point outside every piece");
  return best;
}

std::pair<double, double> ShiftMap::operator()(double x, double a) const { return pieces_[piece_at(x, a)].apply(x, a); }

ShiftMap ShiftMap::inverse() const {
  std::vector<int> inv(colperm_.size());
  for (std::size_t i = 0; i < colperm_.size(); ++i) inv[colperm_[i]] = static_cast<int>(i);
  std::vector<ShiftPiece> pieces;
  pieces.reserve(pieces_.size());
  for (const ShiftPiece& p : pieces_) pieces.push_back({p.dst, p.src});
  return ShiftMap(resolution_, std::move(inv), std::move(pieces));
}

ShiftMap compose(const ShiftMap& f, const ShiftMap& g) {
  if (f.resolution() != g.resolution()) {
    throw Error(ErrorCode::kIncompatibleResolution, "compose() needs equal resolutions (" +
                                                        std::to_string(f.resolution()) + " vs " +
                                                        std::to_string(g.resolution()) + ")");
  }
  std::vector<int> perm(g.colperm().size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = f.colperm()[g.colperm()[i]];
  std::vector<ShiftPiece> pieces;
  for (const ShiftPiece& pg : g.pieces()) {
    for (const ShiftPiece& pf : f.pieces()) {
      const Rect mid{std::max(pg.dst.x0, pf.src.x0), std::min(pg.dst.x1, pf.src.x1), std::max(pg.dst.a0, pf.src.a0),
                     std::min(pg.dst.a1, pf.src.a1)};
      if (mid.width() <= kBreakpointTolerance || mid.height() <= kBreakpointTolerance) continue;
      // Pull `mid` back through g and push it forward through f.
      const ShiftPiece back{pg.dst, pg.src};
      const auto [sx0, sa0] = back.apply(mid.x0, mid.a0);
      const auto [sx1, sa1] = back.apply(mid.x1, mid.a1);
      const auto [dx0, da0] = pf.apply(mid.x0, mid.a0);
      const auto [dx1, da1] = pf.apply(mid.x1, mid.a1);
      pieces.push_back({Rect{sx0, sx1, sa0, sa1}, Rect{dx0, dx1, da0, da1}});
    }
  }
  return ShiftMap(f.resolution(), std::move(perm), std::move(pieces));
}

}  // namespace orderon
