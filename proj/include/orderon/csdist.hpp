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
#include <vector>

#include "orderon/graph.hpp"
#include "orderon/grid.hpp"
#include "orderon/norms.hpp"
#include "orderon/shift_map.hpp"

namespace orderon {

/// W^f((x,a),(y,b)) = W(f(x,a), f(y,b)), represented on the coarsest grid
/// on which it is a step function. Works for any resolution of f.
GridOrderon apply_shift(const GridOrderon& w, const ShiftMap& f);

struct CsOptions {
  int resolution = 4;
  double budget = 1.0;  // maximum shift cost of a candidate map
  std::uint64_t seed = 0;
  /// Column permutations are enumerated exhaustively when resolution <= 10
  /// and at most this many satisfy the displacement limit; otherwise they
  /// are annealed.
  long max_exhaustive = 5040;
  int anneal_steps = 400;
  /// Candidates on at most this many cells are scored with the exact cut
  /// norm during search; larger ones with the certified bound.
  int search_exact_cells = 14;
  /// The best `rescore` candidates are re-scored exactly up to this size.
  int final_exact_cells = kExactCellCap;
  int rescore = 8;
};

struct CsUpper {
  double value = 0.0;  // shift_cost + norm
  double shift_cost = 0.0;
  double norm = 0.0;
  Exactness norm_exactness = Exactness::kExact;  // kExact or kUpperBound
  ShiftMap witness = ShiftMap::identity(1);      // f with value = Shift(f) + ||W - U^f||
  long candidates = 0;
};

struct CsLower {
  double value = 0.0;
  PatternGraph witness = PatternGraph::empty(2);
  double delta_t = 0.0;  // |t(F,W) - t(F,U)| for the witness
};

struct CsDistanceBounds {
  CsUpper upper;
  CsLower lower;
};

/// Certified upper bound on the cut-shift distance: the best
/// Shift(f) + ||W - U^f|| over column permutations at the given resolution
/// (displacement at most budget * resolution columns), each optionally
/// followed by restacking the cells of every column block sorted by degree.
/// Maps built from W's structure are searched too (as ||W^g - U|| with
/// f = g^-1), which makes the bound symmetric in its arguments.
CsUpper cs_upper(const GridOrderon& w, const GridOrderon& u, const CsOptions& options = {});

/// Counting-lemma lower bound: max over patterns F on 2..k_max vertices of
/// (|t(F,W) - t(F,U)| / (6 k! C(k,2)))^2.
CsLower cs_lower(const GridOrderon& w, const GridOrderon& u, int k_max = 3);

CsDistanceBounds cs_bounds(const GridOrderon& w, const GridOrderon& u, const CsOptions& options = {}, int k_max = 3);

}  // namespace orderon
