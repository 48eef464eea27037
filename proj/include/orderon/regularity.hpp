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

#include "orderon/grid.hpp"
#include "orderon/norms.hpp"

namespace orderon {

/// Partition of the cells of a grid into blocks.
class CellPartition {
 public:
  /// kBadPartition unless the blocks are disjoint and cover 0..num_cells-1.
  CellPartition(int num_cells, std::vector<std::vector<int>> blocks);

  static CellPartition trivial(int num_cells);
  static CellPartition singletons(int num_cells);
  /// Cells with equal labels share a block; blocks ordered by first cell.
  static CellPartition from_labels(const std::vector<int>& labels);

  int num_cells() const noexcept { return static_cast<int>(block_of_.size()); }
  int num_blocks() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  int block_of(int cell) const noexcept { return block_of_[cell]; }

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

/// W_P: every block pair replaced by its measure-weighted average.
/// kEmptyBlock for a block with no cells.
GridOrderon stepping(const GridOrderon& w, const CellPartition& p);

struct FkResult {
  CellPartition partition = CellPartition::trivial(1);
  double residual = 0.0;  // cut norm of W - W_P, exact or a lower bound
  Exactness exactness = Exactness::kExact;
  int rounds = 0;
  int cap = 0;
  std::vector<double> history;  // violation found at the start of each round
};

/// Frieze-Kannan style refinement: starting from one block, find S,T with
/// large |integral of W - W_P over S x T| and split every block by S and
/// T. Stops once the residual is at most eps, the block count would exceed
/// min(2^(ceil(1/eps^2)+3), #cells), or the violation stops decreasing.
FkResult fk_partition(const GridOrderon& w, double eps, std::uint64_t seed, int restarts = 8);

}  // namespace orderon
