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

#include <utility>
#include <vector>

#include "orderon/grid.hpp"

namespace orderon {

/// One affine piece of a shift map: `src` is sent onto `dst` by independent
/// increasing affine maps of x and a. Equal areas make the piece measure
/// preserving.
struct ShiftPiece {
  Rect src;
  Rect dst;

  std::pair<double, double> apply(double x, double a) const noexcept {
    return {dst.x0 + (x - src.x0) * (dst.width() / src.width()), dst.a0 + (a - src.a0) * (dst.height() / src.height())};
  }
};

/// Vertical rearrangement inside one column: layer interval [src0,src1] of
/// the source column lands on [dst0,dst1] of the destination column.
struct LayerMove {
  double src0, src1, dst0, dst1;
};

/// Measure-preserving bijection of [0,1]^2 at column resolution r.
///
/// Column i (the interval [i/r, (i+1)/r]) is carried into column colperm[i];
/// inside a column the pieces may rearrange freely. Pieces that keep x fixed
/// inside the column cost nothing beyond the column displacement, so for
/// purely vertical maps shift_cost() = max_i |i - colperm(i)| / r.
class ShiftMap {
 public:
  /// Validates that sources and destinations both tile the unit square, that
  /// every piece preserves area, and that pieces respect colperm.
  ShiftMap(int resolution, std::vector<int> colperm, std::vector<ShiftPiece> pieces);

  static ShiftMap identity(int resolution);
  static ShiftMap column_permutation(std::vector<int> colperm);
  /// `moves[i]` rearranges layers of source column i into column colperm[i];
  /// an empty list means "keep the column intact".
  static ShiftMap with_layer_moves(std::vector<int> colperm, const std::vector<std::vector<LayerMove>>& moves);

  int resolution() const noexcept { return resolution_; }
  const std::vector<int>& colperm() const noexcept { return colperm_; }
  const std::vector<ShiftPiece>& pieces() const noexcept { return pieces_; }

  /// sup over (x,a) of |x - pi_1(f(x,a))|, exact for the affine pieces.
  double shift_cost() const noexcept;

  /// f(x,a).
  std::pair<double, double> operator()(double x, double a) const;

  /// Index of the piece whose source contains (x,a).
  int piece_at(double x, double a) const;

  ShiftMap inverse() const;

 private:
  int resolution_;
  std::vector<int> colperm_;
  std::vector<ShiftPiece> pieces_;
  std::vector<std::vector<int>> by_column_;
};

/// f o g (apply g first). Both maps must share a resolution
/// (kIncompatibleResolution otherwise).
ShiftMap compose(const ShiftMap& f, const ShiftMap& g);

}  // namespace orderon
