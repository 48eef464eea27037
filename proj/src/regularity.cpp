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

#include "orderon/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "orderon/error.hpp"
#include "orderon/rng.hpp"

namespace orderon {

CellPartition::CellPartition(int num_cells, std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  if (num_cells < 1) throw Error(ErrorCode::kBadPartition, "partition needs at least one cell");
  block_of_.assign(static_cast<std::size_t>(num_cells), -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (int c : blocks_[b]) {
      if (c < 0 || c >= num_cells) throw Error(ErrorCode::kBadPartition, "cell " + std::to_string(c) + " out of range");
      if (block_of_[c] >= 0) throw Error(ErrorCode::kBadPartition, "cell " + std::to_string(c) + " in two blocks");
      block_of_[c] = static_cast<int>(b);
    }
  }
  for (int c = 0; c < num_cells; ++c) {
    if (block_of_[c] < 0) throw Error(ErrorCode::kBadPartition, "cell " + std::to_string(c) + " is not covered");
  }
}

CellPartition CellPartition::trivial(int num_cells) {
  std::vector<int> all(static_cast<std::size_t>(std::max(num_cells, 0)));
  for (int i = 0; i < num_cells; ++i) all[i] = i;
  return CellPartition(num_cells, {std::move(all)});
}

CellPartition CellPartition::singletons(int num_cells) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < num_cells; ++i) blocks.push_back({i});
  return CellPartition(num_cells, std::move(blocks));
}

CellPartition CellPartition::from_labels(const std::vector<int>& labels) {
  std::map<int, int> index;
  std::vector<std::vector<int>> blocks;
  for (std::size_t c = 0; c < labels.size(); ++c) {
    auto [it, fresh] = index.try_emplace(labels[c], static_cast<int>(blocks.size()));
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(static_cast<int>(c));
  }
  return CellPartition(static_cast<int>(labels.size()), std::move(blocks));
}

GridOrderon stepping(const GridOrderon& w, const CellPartition& p) {
  const Grid& g = w.grid();
  const int n = w.num_cells();
  if (p.num_cells() != n) throw Error(ErrorCode::kBadPartition, "partition does not match the grid");
  const int k = p.num_blocks();
  std::vector<double> mass(static_cast<std::size_t>(k), 0.0);
  for (int b = 0; b < k; ++b) {
    for (int c : p.blocks()[b]) mass[b] += g.cell_measure(c);
    if (!(mass[b] > 0.0)) throw Error(ErrorCode::kEmptyBlock, "block " + std::to_string(b) + " has zero measure");
  }
  std::vector<double> sums(static_cast<std::size_t>(k) * k, 0.0);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      sums[static_cast<std::size_t>(p.block_of(s)) * k + p.block_of(t)] +=
          w.value(s, t) * g.cell_measure(s) * g.cell_measure(t);
  std::vector<double> values(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      const int a = p.block_of(s), b = p.block_of(t);
      // Average the two mirrored sums so the result is exactly symmetric.
      const double avg = 0.5 * (sums[static_cast<std::size_t>(a) * k + b] + sums[static_cast<std::size_t>(b) * k + a]) /
                         (mass[a] * mass[b]);
      values[static_cast<std::size_t>(s) * n + t] = std::clamp(avg, 0.0, 1.0);
    }
  }
  return GridOrderon(g, std::move(values));
}

FkResult fk_partition(const GridOrderon& w, double eps, std::uint64_t seed, int restarts) {
  if (!(eps > 0.0)) throw Error(ErrorCode::kBadArgument, "eps must be positive");
  const int n = w.num_cells();
  const double exponent = std::ceil(1.0 / (eps * eps)) + 3.0;
  FkResult out;
  out.cap = exponent >= 30.0 ? n : std::min(n, 1 << static_cast<int>(exponent));
  out.partition = CellPartition::trivial(n);

  for (;;) {
    const GridOrderon wp = stepping(w, out.partition);
    std::vector<double> diff(w.values().size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = w.values()[i] - wp.values()[i];
    const StepKernel d(w.grid(), std::move(diff));
    const NormCertificate cert = n <= kExactCellCap
                                     ? cut_norm_exact(d)
                                     : cut_norm_heuristic(d, restarts, derive_seed(seed, static_cast<std::uint64_t>(out.rounds)));
    const bool stalled = !out.history.empty() && !(cert.value < out.history.back());
    out.history.push_back(cert.value);
    out.residual = cert.value;
    out.exactness = cert.exactness;
    if (cert.value <= eps || stalled) break;

    // Split every block by membership in S and in T.
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::vector<char> in_s(static_cast<std::size_t>(n), 0), in_t(static_cast<std::size_t>(n), 0);
    for (int c : cert.witness_s) in_s[c] = 1;
    for (int c : cert.witness_t) in_t[c] = 1;
    for (int c = 0; c < n; ++c) labels[c] = out.partition.block_of(c) * 4 + in_s[c] * 2 + in_t[c];
    CellPartition next = CellPartition::from_labels(labels);
    if (next.num_blocks() > out.cap || next.num_blocks() == out.partition.num_blocks()) break;
    out.partition = std::move(next);
    ++out.rounds;
  }
  return out;
}

}  // namespace orderon
