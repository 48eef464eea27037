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

#include "orderon/csdist.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "orderon/density.hpp"
#include "orderon/error.hpp"
#include "orderon/rng.hpp"

namespace orderon {
namespace {

bool contains(const Rect& r, double x, double a) noexcept {
  return x >= r.x0 && x <= r.x1 && a >= r.a0 && a <= r.a1;
}

enum class Variant { kPlain, kSortDescending, kSortAscending };

std::vector<double> degrees(const GridOrderon& k) {
  const int n = k.num_cells();
  std::vector<double> deg(static_cast<std::size_t>(n), 0.0);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) deg[s] += k.value(s, t) * k.grid().cell_measure(t);
  return deg;
}

// Column permutation at resolution r; for the sort variants the cells of K
// inside destination block perm[i] are restacked as full-width bands of
// source block i, ordered by degree.
ShiftMap build_map(const GridOrderon& k, const std::vector<double>& deg, const std::vector<int>& perm, Variant v) {
  if (v == Variant::kPlain) return ShiftMap::column_permutation(perm);
  const int r = static_cast<int>(perm.size());
  const Grid& g = k.grid();
  std::vector<ShiftPiece> pieces;
  for (int i = 0; i < r; ++i) {
    const int j = perm[i];
    const double b0 = static_cast<double>(j) / r, b1 = static_cast<double>(j + 1) / r;
    struct Unit {
      Rect dst;
      double degree;
    };
    std::vector<Unit> units;
    for (int c = 0; c < g.num_columns(); ++c) {
      const double u0 = std::max(b0, g.xcuts()[c]), u1 = std::min(b1, g.xcuts()[c + 1]);
      if (u1 - u0 <= kBreakpointTolerance) continue;
      const auto layers = g.layers(c);
      for (int p = 0; p + 1 < static_cast<int>(layers.size()); ++p) {
        units.push_back({Rect{u0, u1, layers[p], layers[p + 1]}, deg[g.cell_index(c, p)]});
      }
    }
    std::stable_sort(units.begin(), units.end(), [&](const Unit& a, const Unit& b) {
      return v == Variant::kSortDescending ? a.degree > b.degree : a.degree < b.degree;
    });
    const double s0 = static_cast<double>(i) / r, s1 = static_cast<double>(i + 1) / r;
    double height = 0.0;
    for (std::size_t n = 0; n < units.size(); ++n) {
      const double top = n + 1 == units.size() ? 1.0 : height + units[n].dst.area() * r;
      pieces.push_back({Rect{s0, s1, height, top}, units[n].dst});
      height = top;
    }
  }
  return ShiftMap(r, perm, std::move(pieces));
}

struct Scored {
  double norm;
  Exactness exactness;
  int cells;
};

Scored score(const StepKernel& d, int exact_cells) {
  if (d.num_cells() <= exact_cells) return {cut_norm_exact(d, exact_cells).value, Exactness::kExact, d.num_cells()};
  return {cut_norm_upper_bound(d).value, Exactness::kUpperBound, d.num_cells()};
}

struct Candidate {
  double total;
  double cost;
  Scored scored;
  int side;  // 0: map applied to U, 1: map applied to W
  Variant variant;
  std::vector<int> perm;
};

bool better(const Candidate& a, const Candidate& b) {
  return std::tie(a.total, a.side, a.variant, a.perm) < std::tie(b.total, b.side, b.variant, b.perm);
}

// Searches maps f applied to `k` against the fixed kernel `other`.
class SideSearch {
 public:
  SideSearch(const GridOrderon& k, const GridOrderon& other, int side, const CsOptions& opt)
      : k_(k), other_(other), side_(side), opt_(opt), deg_(degrees(k)) {}

  // Best variant for a permutation; all evaluated candidates go to `pool`.
  double evaluate(const std::vector<int>& perm, std::vector<Candidate>& pool) {
    double best = std::numeric_limits<double>::infinity();
    for (Variant v : {Variant::kPlain, Variant::kSortDescending, Variant::kSortAscending}) {
      const ShiftMap f = build_map(k_, deg_, perm, v);
      const double cost = f.shift_cost();
      if (cost > opt_.budget + 1e-12) continue;
      const Scored s = score(StepKernel::difference(other_, apply_shift(k_, f)), opt_.search_exact_cells);
      pool.push_back({cost + s.norm, cost, s, side_, v, perm});
      best = std::min(best, cost + s.norm);
    }
    return best;
  }

  ShiftMap rebuild(const Candidate& c) const { return build_map(k_, deg_, c.perm, c.variant); }
  StepKernel kernel(const ShiftMap& f) const { return StepKernel::difference(other_, apply_shift(k_, f)); }

 private:
  const GridOrderon& k_;
  const GridOrderon& other_;
  int side_;
  const CsOptions& opt_;
  std::vector<double> deg_;
};

// Permutations with |perm[i] - i| <= reach, in lexicographic order.
void enumerate(int r, int reach, std::vector<int>& perm, std::vector<char>& used, int pos,
               const std::function<void(const std::vector<int>&)>& visit) {
  if (pos == r) {
    visit(perm);
    return;
  }
  for (int c = std::max(0, pos - reach); c <= std::min(r - 1, pos + reach); ++c) {
    if (used[c]) continue;
    // A column left behind can no longer be placed.
    if (pos - reach >= 1 && !used[pos - reach - 1] && c != pos - reach - 1) continue;
    used[c] = 1;
    perm[pos] = c;
    enumerate(r, reach, perm, used, pos + 1, visit);
    used[c] = 0;
  }
}

long count_permutations(int r, int reach, long limit) {
  long count = 0;
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::vector<char> used(static_cast<std::size_t>(r), 0);
  struct Stop {};
  try {
    enumerate(r, reach, perm, used, 0, [&](const std::vector<int>&) {
      if (++count > limit) throw Stop{};
    });
  } catch (const Stop&) {
  }
  return count;
}

void anneal(SideSearch& search, int r, int reach, const CsOptions& opt, std::vector<Candidate>& pool) {
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  double current = search.evaluate(perm, pool);
  if (r < 2 || reach < 1) return;
  Rng rng(derive_seed(opt.seed, 0xa11ea1));
  constexpr double kT0 = 0.05, kT1 = 1e-4;
  for (int step = 0; step < opt.anneal_steps; ++step) {
    const double temp = kT0 * std::pow(kT1 / kT0, static_cast<double>(step) / std::max(opt.anneal_steps - 1, 1));
    const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(r)));
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(r)));
    if (i == j || std::abs(perm[j] - i) > reach || std::abs(perm[i] - j) > reach) continue;
    std::swap(perm[i], perm[j]);
    const double next = search.evaluate(perm, pool);
    if (next <= current || rng.uniform() < std::exp((current - next) / temp)) {
      current = next;
    } else {
      std::swap(perm[i], perm[j]);
    }
  }
}

void search_side(SideSearch& search, int r, int reach, const CsOptions& opt, std::vector<Candidate>& pool) {
  if (r <= 10 && count_permutations(r, reach, opt.max_exhaustive) <= opt.max_exhaustive) {
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::vector<char> used(static_cast<std::size_t>(r), 0);
    enumerate(r, reach, perm, used, 0, [&](const std::vector<int>& p) { search.evaluate(p, pool); });
  } else {
    anneal(search, r, reach, opt, pool);
  }
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

GridOrderon apply_shift(const GridOrderon& w, const ShiftMap& f) {
  const Grid& g = w.grid();
  const auto& pieces = f.pieces();

  std::vector<double> xs{0.0, 1.0};
  for (const ShiftPiece& p : pieces) {
    std::vector<double> local{p.src.x0, p.src.x1};
    for (double cut : g.xcuts()) {
      if (cut > p.dst.x0 && cut < p.dst.x1) local.push_back(p.src.x0 + (cut - p.dst.x0) * p.src.width() / p.dst.width());
    }
    xs = merge_cuts(xs, local);
  }

  const int columns = static_cast<int>(xs.size()) - 1;
  std::vector<std::vector<double>> layers(static_cast<std::size_t>(columns));
  for (int c = 0; c < columns; ++c) {
    const double xm = 0.5 * (xs[c] + xs[c + 1]);
    std::vector<double> cuts{0.0, 1.0};
    for (const ShiftPiece& p : pieces) {
      if (!(xm > p.src.x0 && xm < p.src.x1)) continue;
      std::vector<double> local{p.src.a0, p.src.a1};
      const int wc = g.locate_column(p.apply(xm, p.src.a0).first);
      for (double a : g.layers(wc)) {
        if (a > p.dst.a0 && a < p.dst.a1) local.push_back(p.src.a0 + (a - p.dst.a0) * p.src.height() / p.dst.height());
      }
      cuts = merge_cuts(cuts, local);
    }
    layers[c] = std::move(cuts);
  }
  Grid out(std::move(xs), std::move(layers));

  // Source cell -> cell of W containing the image of its midpoint.
  const int n = out.num_cells();
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    const Rect rc = out.cell_rect(s);
    const double xm = 0.5 * (rc.x0 + rc.x1), am = 0.5 * (rc.a0 + rc.a1);
    const ShiftPiece* hit = nullptr;
    for (const ShiftPiece& p : pieces) {
      if (contains(p.src, xm, am)) {
        hit = &p;
        break;
      }
    }
    if (hit == nullptr) hit = &pieces[f.piece_at(xm, am)];
    const auto [x, a] = hit->apply(xm, am);
    image[s] = g.locate(x, a);
  }
  std::vector<double> values(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) values[static_cast<std::size_t>(s) * n + t] = w.value(image[s], image[t]);
  return GridOrderon(std::move(out), std::move(values));
}

CsUpper cs_upper(const GridOrderon& w, const GridOrderon& u, const CsOptions& opt) {
  if (opt.resolution < 1) throw Error(ErrorCode::kBadArgument, "resolution must be >= 1");
  if (!(opt.budget >= 0.0)) throw Error(ErrorCode::kBadArgument, "budget must be >= 0");
  const int r = opt.resolution;
  const int reach = std::min(r - 1, static_cast<int>(std::floor(opt.budget * r + 1e-9)));

  std::vector<Candidate> pool;
  SideSearch on_u(u, w, 0, opt);
  SideSearch on_w(w, u, 1, opt);
  search_side(on_u, r, reach, opt, pool);
  search_side(on_w, r, reach, opt, pool);

  // Re-score the most promising bound-scored candidates exactly.
  std::sort(pool.begin(), pool.end(), better);
  int rescored = 0;
  for (Candidate& c : pool) {
    if (rescored >= opt.rescore) break;
    if (c.scored.exactness == Exactness::kExact || c.scored.cells > opt.final_exact_cells) continue;
    SideSearch& s = c.side == 0 ? on_u : on_w;
    c.scored = {cut_norm_exact(s.kernel(s.rebuild(c)), opt.final_exact_cells).value, Exactness::kExact, c.scored.cells};
    c.total = c.cost + c.scored.norm;
    ++rescored;
  }
  const Candidate& best = *std::min_element(pool.begin(), pool.end(), better);

  CsUpper out;
  out.value = best.total;
  out.shift_cost = best.cost;
  out.norm = best.scored.norm;
  out.norm_exactness = best.scored.exactness;
  const ShiftMap f = (best.side == 0 ? on_u : on_w).rebuild(best);
  out.witness = best.side == 0 ? f : f.inverse();
  out.candidates = static_cast<long>(pool.size());
  return out;
}

CsLower cs_lower(const GridOrderon& w, const GridOrderon& u, int k_max) {
  if (k_max < 2 || k_max > kDefaultMaxPatternSize) {
    throw Error(ErrorCode::kPatternTooLarge, "k_max must lie in [2, " + std::to_string(kDefaultMaxPatternSize) + "]");
  }
  CsLower out;
  for (int k = 2; k <= k_max; ++k) {
    const auto tw = pattern_distribution(w, k);
    const auto tu = pattern_distribution(u, k);
    const double scale = 6.0 * factorial(k) * PatternGraph::pair_count(k);
    for (std::size_t m = 0; m < tw.size(); ++m) {
      const double delta = std::abs(tw[m] - tu[m]);
      const double bound = (delta / scale) * (delta / scale);
      if (bound > out.value) {
        out.value = bound;
        out.witness = PatternGraph(k, static_cast<std::uint32_t>(m));
        out.delta_t = delta;
      }
    }
  }
  return out;
}

CsDistanceBounds cs_bounds(const GridOrderon& w, const GridOrderon& u, const CsOptions& options, int k_max) {
  return {cs_upper(w, u, options), cs_lower(w, u, k_max)};
}

}  // namespace orderon
