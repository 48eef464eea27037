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

#include "orderon/norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orderon/error.hpp"
#include "orderon/rng.hpp"

namespace orderon {
namespace {

// Ordered levels are searched exhaustively only while cheap; larger ones
// use the warm-started local search.
constexpr int kOrderedExhaustiveCells = 16;

// Weighted bilinear form M(s,t) = D(s,t) * lambda_s * lambda_t * order(s,t).
struct Bilinear {
  int n = 0;
  std::vector<double> m;

  double at(int s, int t) const noexcept { return m[static_cast<std::size_t>(s) * n + t]; }
};

Bilinear make_bilinear(const StepKernel& d, bool ordered) {
  const Grid& g = d.grid();
  Bilinear b{d.num_cells(), {}};
  b.m.resize(static_cast<std::size_t>(b.n) * b.n);
  for (int s = 0; s < b.n; ++s) {
    for (int t = 0; t < b.n; ++t) {
      double order = 1.0;
      if (ordered) {
        const int cs = g.column_of(s), ct = g.column_of(t);
        order = cs < ct ? 1.0 : (cs > ct ? 0.0 : 0.5);
      }
      b.m[static_cast<std::size_t>(s) * b.n + t] = d.value(s, t) * g.cell_measure(s) * g.cell_measure(t) * order;
    }
  }
  return b;
}

struct Choice {
  std::vector<char> s, t;
  double value = 0.0;  // signed integral over S x T
};

double evaluate(const Bilinear& b, const std::vector<char>& s, const std::vector<char>& t) {
  double total = 0.0;
  for (int i = 0; i < b.n; ++i) {
    if (!s[i]) continue;
    for (int j = 0; j < b.n; ++j)
      if (t[j]) total += b.at(i, j);
  }
  return total;
}

// Best T for fixed S and sign (+1 maximizes, -1 minimizes).
void best_t(const Bilinear& b, const std::vector<char>& s, double sign, std::vector<char>& t) {
  std::vector<double> col(static_cast<std::size_t>(b.n), 0.0);
  for (int i = 0; i < b.n; ++i) {
    if (!s[i]) continue;
    for (int j = 0; j < b.n; ++j) col[j] += b.at(i, j);
  }
  for (int j = 0; j < b.n; ++j) t[j] = sign * col[j] > 0.0;
}

void best_s(const Bilinear& b, const std::vector<char>& t, double sign, std::vector<char>& s) {
  for (int i = 0; i < b.n; ++i) {
    double row = 0.0;
    for (int j = 0; j < b.n; ++j)
      if (t[j]) row += b.at(i, j);
    s[i] = sign * row > 0.0;
  }
}

// Alternating best responses from S; returns the local optimum for `sign`.
Choice climb(const Bilinear& b, std::vector<char> s, double sign) {
  const int n = b.n;
  std::vector<char> t(static_cast<std::size_t>(n));
  std::vector<double> sums(static_cast<std::size_t>(n));
  double current = -1.0;
  for (int iter = 0; iter < 200; ++iter) {
    // T from S.
    std::fill(sums.begin(), sums.end(), 0.0);
    for (int i = 0; i < n; ++i) {
      if (!s[i]) continue;
      const double* row = &b.m[static_cast<std::size_t>(i) * n];
      for (int j = 0; j < n; ++j) sums[j] += row[j];
    }
    double value = 0.0;
    for (int j = 0; j < n; ++j) {
      t[j] = sign * sums[j] > 0.0;
      if (t[j]) value += sign * sums[j];
    }
    if (!(value > current + 1e-15)) break;
    current = value;
    // S from T.
    std::vector<char> next(static_cast<std::size_t>(n));
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      const double* row = &b.m[static_cast<std::size_t>(i) * n];
      double r = 0.0;
      for (int j = 0; j < n; ++j)
        if (t[j]) r += row[j];
      next[i] = sign * r > 0.0;
      changed = changed || next[i] != s[i];
    }
    if (!changed) break;
    s = std::move(next);
  }
  // Re-derive T for the final S so the pair is consistent.
  best_t(b, s, sign, t);
  return Choice{s, t, evaluate(b, s, t)};
}

std::vector<int> to_indices(const std::vector<char>& flags) {
  std::vector<int> out;
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<char> to_flags(std::span<const int> cells, int n) {
  std::vector<char> flags(static_cast<std::size_t>(n), 0);
  for (int c : cells) flags[c] = 1;
  return flags;
}

NormCertificate certificate(const StepKernel& d, const Choice& c, Exactness exactness, bool ordered) {
  NormCertificate cert;
  cert.witness_s = to_indices(c.s);
  cert.witness_t = to_indices(c.t);
  cert.value = std::abs(ordered ? ordered_cut_value(d, cert.witness_s, cert.witness_t)
                                : cut_value(d, cert.witness_s, cert.witness_t));
  cert.exactness = exactness;
  cert.ordered = ordered;
  cert.grid = d.grid();
  return cert;
}

// Exhaustive search over S in increasing bitmask order; T by sign.
Choice exhaustive(const Bilinear& b) {
  const int n = b.n;
  std::vector<double> col(static_cast<std::size_t>(n), 0.0);
  double best = 0.0;
  std::uint64_t best_mask = 0;
  double best_sign = 1.0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    // Bits that differ from mask - 1: trailing ones cleared, one bit set.
    const std::uint64_t changed = mask ^ (mask - 1);
    for (int i = 0; i < n; ++i) {
      if (!((changed >> i) & 1u)) continue;
      const double sgn = ((mask >> i) & 1u) ? 1.0 : -1.0;
      const double* row = &b.m[static_cast<std::size_t>(i) * n];
      for (int j = 0; j < n; ++j) col[j] += sgn * row[j];
    }
    double pos = 0.0, neg = 0.0;
    for (int j = 0; j < n; ++j) {
      if (col[j] > 0.0) {
        pos += col[j];
      } else {
        neg -= col[j];
      }
    }
    if (pos > best) {
      best = pos;
      best_mask = mask;
      best_sign = 1.0;
    }
    if (neg > best) {
      best = neg;
      best_mask = mask;
      best_sign = -1.0;
    }
  }
  Choice c;
  c.s.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) c.s[i] = (best_mask >> i) & 1u;
  c.t.assign(static_cast<std::size_t>(n), 0);
  best_t(b, c.s, best_sign, c.t);
  c.value = best_sign * best;
  return c;
}

// Best of the deterministic starts, the supplied warm starts and `restarts`
// random starts, each climbed for both signs.
Choice search(const Bilinear& b, int restarts, std::uint64_t seed, const std::vector<std::vector<char>>& warm) {
  const int n = b.n;
  Choice best{std::vector<char>(static_cast<std::size_t>(n), 0), std::vector<char>(static_cast<std::size_t>(n), 0), 0.0};
  auto consider = [&](const std::vector<char>& start) {
    for (double sign : {1.0, -1.0}) {
      Choice c = climb(b, start, sign);
      if (std::abs(c.value) > std::abs(best.value)) best = std::move(c);
    }
  };
  for (const auto& start : warm) consider(start);
  consider(std::vector<char>(static_cast<std::size_t>(n), 1));
  std::vector<char> positive(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += b.at(i, j);
    positive[i] = row > 0.0;
  }
  consider(positive);
  for (int r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    std::vector<char> start(static_cast<std::size_t>(n));
    for (auto& v : start) v = static_cast<char>(rng() >> 63);
    consider(start);
  }
  return best;
}

}  // namespace

StepKernel::StepKernel(Grid grid, std::vector<double> values) : grid_(std::move(grid)), values_(std::move(values)) {
  const auto n = static_cast<std::size_t>(grid_.num_cells());
  if (values_.size() != n * n) throw Error(ErrorCode::kBadBreakpoints, "kernel tensor size does not match grid");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = values_[i * n + j];
      if (!(v >= -1.0 && v <= 1.0)) throw Error(ErrorCode::kOutOfRangeValue, "kernel values must lie in [-1,1]");
      if (j > i && std::abs(v - values_[j * n + i]) > 1e-12) {
        throw Error(ErrorCode::kAsymmetricValues, "kernel is not symmetric");
      }
    }
  }
}

StepKernel StepKernel::difference(const GridOrderon& w, const GridOrderon& u) {
  auto [a, b] = common_refinement(w, u);
  std::vector<double> values(a.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = a.values()[i] - b.values()[i];
  return StepKernel(a.grid(), std::move(values));
}

double cut_value(const StepKernel& d, std::span<const int> s, std::span<const int> t) {
  const Grid& g = d.grid();
  double total = 0.0;
  for (int i : s) {
    double row = 0.0;
    for (int j : t) row += d.value(i, j) * g.cell_measure(j);
    total += row * g.cell_measure(i);
  }
  return total;
}

double ordered_cut_value(const StepKernel& d, std::span<const int> s, std::span<const int> t) {
  const Grid& g = d.grid();
  double total = 0.0;
  for (int i : s) {
    double row = 0.0;
    for (int j : t) {
      const int ci = g.column_of(i), cj = g.column_of(j);
      if (ci > cj) continue;
      row += d.value(i, j) * g.cell_measure(j) * (ci == cj ? 0.5 : 1.0);
    }
    total += row * g.cell_measure(i);
  }
  return total;
}

NormCertificate cut_norm_exact(const StepKernel& d, int max_cells) {
  if (d.num_cells() > max_cells || d.num_cells() > 62) {
    throw Error(ErrorCode::kTooManyCells, std::to_string(d.num_cells()) + " cells exceed the exact cap of " +
                                              std::to_string(max_cells) + "; use cut_norm_heuristic");
  }
  return certificate(d, exhaustive(make_bilinear(d, false)), Exactness::kExact, false);
}

NormCertificate cut_norm_heuristic(const StepKernel& d, int restarts, std::uint64_t seed) {
  return certificate(d, search(make_bilinear(d, false), restarts, seed, {}), Exactness::kLowerBound, false);
}

NormCertificate cut_norm_upper_bound(const StepKernel& d) {
  const Grid& g = d.grid();
  const int n = d.num_cells();
  double pos = 0.0, neg = 0.0;
  std::vector<char> s_pos(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = d.value(i, j) * g.cell_measure(i) * g.cell_measure(j);
      if (v > 0) {
        pos += v;
      } else {
        neg -= v;
      }
    }
  }
  NormCertificate cert;
  cert.value = std::max(pos, neg);
  cert.exactness = Exactness::kUpperBound;
  cert.grid = g;
  return cert;
}

StepKernel refine_for_order(const StepKernel& d, int depth) {
  if (depth < 0) throw Error(ErrorCode::kBadArgument, "depth must be >= 0");
  if (depth > 20) throw Error(ErrorCode::kDepthTooLarge, "depth " + std::to_string(depth) + " is too large");
  const Grid& g = d.grid();
  const int parts = 1 << depth;
  std::vector<double> xs{0.0};
  std::vector<std::vector<double>> layers;
  std::vector<int> parent_col;
  for (int c = 0; c < g.num_columns(); ++c) {
    const double x0 = g.xcuts()[c], x1 = g.xcuts()[c + 1];
    for (int p = 1; p <= parts; ++p) {
      xs.push_back(p == parts ? x1 : x0 + (x1 - x0) * p / parts);
      layers.emplace_back(g.layers(c).begin(), g.layers(c).end());
      parent_col.push_back(c);
    }
  }
  Grid fine(std::move(xs), std::move(layers));
  const int n = fine.num_cells();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[i] = g.cell_index(parent_col[fine.column_of(i)], fine.layer_of(i));
  std::vector<double> values(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) values[static_cast<std::size_t>(i) * n + j] = d.value(parent[i], parent[j]);
  return StepKernel(std::move(fine), std::move(values));
}

NormCertificate ordered_cut_norm(const StepKernel& d, int depth, int restarts, std::uint64_t seed) {
  if (depth < 0) throw Error(ErrorCode::kBadArgument, "depth must be >= 0");
  const long long refined = static_cast<long long>(d.num_cells()) << std::min(depth, 40);
  if (depth > 20 || refined > kOrderedCellCap) {
    throw Error(ErrorCode::kDepthTooLarge, std::to_string(refined) + " refined cells exceed the cap of " +
                                               std::to_string(kOrderedCellCap));
  }
  // Unordered witness: (S,T) and (T,S) together carry the whole cut value,
  // so one of them holds at least half of it in the ordered integral.
  const NormCertificate plain =
      d.num_cells() <= kExactCellCap ? cut_norm_exact(d) : cut_norm_heuristic(d, restarts, seed);

  std::vector<char> prev_s, prev_t;
  NormCertificate best;
  for (int level = 0; level <= depth; ++level) {
    const StepKernel fine = refine_for_order(d, level);
    const Bilinear b = make_bilinear(fine, true);
    const int n = fine.num_cells();
    const int parts = 1 << level;
    // Cell of `fine` -> cell of d, and -> cell of the previous level.
    auto lift = [&](const std::vector<char>& coarse, int coarse_parts, const Grid& coarse_grid) {
      std::vector<char> out(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        const int col = fine.grid().column_of(i) / (parts / coarse_parts);
        out[i] = coarse[coarse_grid.cell_index(col, fine.grid().layer_of(i))];
      }
      return out;
    };
    const auto base_s = to_flags(plain.witness_s, d.num_cells());
    const auto base_t = to_flags(plain.witness_t, d.num_cells());
    std::vector<std::vector<char>> warm{lift(base_s, 1, d.grid()), lift(base_t, 1, d.grid())};
    Choice chosen;
    if (n <= kOrderedExhaustiveCells) {
      chosen = exhaustive(b);
    } else {
      chosen = search(b, restarts, derive_seed(seed, static_cast<std::uint64_t>(level)), warm);
    }
    // Candidates that must not be lost: the lifted previous optimum and the
    // unordered witness in both orientations.
    std::vector<Choice> keep;
    if (level > 0) {
      const Grid coarse = refine_for_order(d, level - 1).grid();
      keep.push_back(Choice{lift(prev_s, parts / 2, coarse), lift(prev_t, parts / 2, coarse), 0.0});
    }
    keep.push_back(Choice{warm[0], warm[1], 0.0});
    keep.push_back(Choice{warm[1], warm[0], 0.0});
    for (Choice& c : keep) {
      c.value = evaluate(b, c.s, c.t);
      if (std::abs(c.value) > std::abs(chosen.value)) chosen = std::move(c);
    }
    prev_s = chosen.s;
    prev_t = chosen.t;
    best = certificate(fine, chosen, Exactness::kLowerBound, true);
    best.depth = level;
  }
  return best;
}

double l1_distance(const GridOrderon& w, const GridOrderon& u) {
  auto [a, b] = common_refinement(w, u);
  const Grid& g = a.grid();
  const int n = g.num_cells();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(a.value(i, j) - b.value(i, j)) * g.cell_measure(j);
    total += row * g.cell_measure(i);
  }
  return total;
}

}  // namespace orderon
