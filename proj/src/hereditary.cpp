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

#include "orderon/hereditary.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <unordered_set>

#include "orderon/density.hpp"
#include "orderon/error.hpp"
#include "orderon/rng.hpp"

namespace orderon {
namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Extends tuple[0..depth) to a copy of pattern f; pairs are checked as soon
// as both ends are placed.
bool find_copy(const OrderedGraph& g, const PatternGraph& f, std::vector<int>& tuple, int depth) {
  const int k = f.size();
  if (depth == k) return true;
  const int n = g.size();
  const int start = depth == 0 ? 0 : tuple[depth - 1] + 1;
  for (int v = start; v <= n - (k - depth); ++v) {
    bool ok = true;
    for (int i = 0; i < depth && ok; ++i) ok = g.has_edge(tuple[i], v) == f.has_edge(i, depth);
    if (!ok) continue;
    tuple[depth] = v;
    if (find_copy(g, f, tuple, depth + 1)) return true;
  }
  return false;
}

}  // namespace

MembershipVerdict is_member_threshold(const OrderedGraph& g) {
  const int n = g.size();
  // Non-edge with the earliest later endpoint; edge with the latest earlier one.
  int u1 = -1, u2 = n;
  for (int j = 1; j < n && u2 == n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (!g.has_edge(i, j)) {
        u1 = i;
        u2 = j;
        break;
      }
    }
  }
  int u3 = -1, u4 = -1;
  for (int i = n - 2; i >= 0 && u3 < 0; --i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) {
        u3 = i;
        u4 = j;
        break;
      }
    }
  }
  MembershipVerdict out;
  if (u3 >= 0 && u2 < n && u2 <= u3) {
    out.member = false;
    out.witness = {u1, u2, u3, u4};
    return out;
  }
  out.threshold = std::min(n, u2);
  return out;
}

MembershipVerdict is_member_forbidden(const OrderedGraph& g, const PropertySpec& spec) {
  const int n = g.size();
  const double work = binomial(n, std::min(spec.max_pattern_size(), n));
  if (work > kForbiddenSearchBudget) {
    throw Error(ErrorCode::kGraphTooLarge, "C(" + std::to_string(n) + "," + std::to_string(spec.max_pattern_size()) +
                                               ") vertex tuples exceed the brute-force budget");
  }
  MembershipVerdict out;
  const auto& family = spec.patterns();
  for (std::size_t p = 0; p < family.size(); ++p) {
    if (family[p].size() > n) continue;
    std::vector<int> tuple(static_cast<std::size_t>(family[p].size()));
    if (find_copy(g, family[p], tuple, 0)) {
      out.member = false;
      out.witness = std::move(tuple);
      out.pattern = static_cast<int>(p);
      return out;
    }
  }
  return out;
}

MembershipVerdict is_member(const OrderedGraph& g, const PropertySpec& spec) {
  return spec.kind() == PropertySpec::Kind::kThreshold ? is_member_threshold(g) : is_member_forbidden(g, spec);
}

ThresholdDistance dist_threshold(const OrderedGraph& g) {
  const int n = g.size();
  if (n < 2) throw Error(ErrorCode::kBadArgument, "dist_threshold needs n >= 2");
  // prefix[i]: non-edges inside [0,i); suffix[i]: edges inside [i,n).
  std::vector<long> prefix(static_cast<std::size_t>(n) + 1, 0), suffix(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    long missing = 0;
    for (int j = 0; j < i - 1; ++j) missing += !g.has_edge(j, i - 1);
    prefix[i] = prefix[i - 1] + missing;
  }
  for (int i = n - 1; i >= 0; --i) {
    long present = 0;
    for (int j = i + 1; j < n; ++j) present += g.has_edge(i, j);
    suffix[i] = suffix[i + 1] + present;
  }
  ThresholdDistance out;
  out.edits = prefix[0] + suffix[0];
  for (int i = 1; i <= n; ++i) {
    if (prefix[i] + suffix[i] < out.edits) {
      out.edits = prefix[i] + suffix[i];
      out.threshold = i;
    }
  }
  out.distance = static_cast<double>(out.edits) / (0.5 * n * (n - 1.0));
  return out;
}

OrderedGraph extremal_graph(int n) {
  if (n < 2) throw Error(ErrorCode::kBadArgument, "extremal_graph needs n >= 2");
  OrderedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((u + 1) + (v + 1) >= n) g.set_edge(u, v, true);
  return g;
}

ClosureCheck closure_density_check(const GridOrderon& w, const PropertySpec& spec, int k_max) {
  if (k_max > kDefaultMaxPatternSize) {
    throw Error(ErrorCode::kPatternTooLarge, "k_max " + std::to_string(k_max) + " exceeds the density cap");
  }
  ClosureCheck out;
  for (const PatternGraph& f : spec.patterns()) {
    if (f.size() > k_max) continue;
    const double t = t_orderon(f, w, k_max).value;
    if (t > out.max_density) out.max_density = t;
    if (t > 1e-12 && out.holds) {
      out.holds = false;
      out.witness = f;
    }
  }
  return out;
}

std::vector<int> random_subset(int n, int k, std::uint64_t seed) {
  if (k < 0 || k > n) throw Error(ErrorCode::kBadArgument, "subset size must lie in [0, n]");
  // Floyd's algorithm: k draws, each inserting one new element.
  Rng rng(seed);
  std::unordered_set<int> chosen;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int j = n - k; j < n; ++j) {
    const int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(j) + 1));
    const int pick = chosen.count(t) ? j : t;
    chosen.insert(pick);
    out.push_back(pick);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TesterVerdict removal_tester(const OrderedGraph& g, const PropertySpec& spec, int k, std::uint64_t seed) {
  if (k < 1 || k > g.size()) throw Error(ErrorCode::kBadArgument, "sample size must lie in [1, n]");
  TesterVerdict out;
  out.sample = random_subset(g.size(), k, seed);
  out.verdict = is_member(g.induced(out.sample), spec);
  out.accepted = out.verdict.member;
  for (int& v : out.verdict.witness) v = out.sample[v];
  return out;
}

double evaluate(const GraphParameter& f, const OrderedGraph& g) {
  const int n = g.size();
  switch (f.kind) {
    case GraphParameter::Kind::kEdgeDensity:
      return n < 2 ? 0.0 : g.edge_count() / (0.5 * n * (n - 1.0));
    case GraphParameter::Kind::kPatternDensity:
      if (!f.pattern) throw Error(ErrorCode::kBadArgument, "pattern density needs a pattern");
      return t_graph(*f.pattern, g).value;
    case GraphParameter::Kind::kThresholdDistance:
      return n < 2 ? 0.0 : dist_threshold(g).distance;
  }
  return 0.0;
}

EstimationReport estimate_parameter(const OrderedGraph& g, const GraphParameter& f, int k, int trials,
                                    std::uint64_t seed, int threads) {
  if (k < 1 || k > g.size()) throw Error(ErrorCode::kBadArgument, "sample size must lie in [1, n]");
  if (trials < 1) throw Error(ErrorCode::kBadArgument, "trials must be >= 1");
  EstimationReport out;
  out.k = k;
  out.trials = trials;
  out.full_value = evaluate(f, g);
  out.deviations.assign(static_cast<std::size_t>(trials), 0.0);
  auto run = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      const auto sample = random_subset(g.size(), k, derive_seed(seed, static_cast<std::uint64_t>(i)));
      out.deviations[i] = std::abs(out.full_value - evaluate(f, g.induced(sample)));
    }
  };
  const int workers = std::clamp(threads, 1, trials);
  {
    std::vector<std::jthread> pool;
    const int chunk = (trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w * chunk, std::min(trials, (w + 1) * chunk));
  }
  std::vector<double> sorted = out.deviations;
  std::sort(sorted.begin(), sorted.end());
  for (double level : kQuantileLevels) {
    // Linear interpolation between order statistics.
    const double pos = level * (trials - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    out.quantiles.emplace_back(level, sorted[lo] + (pos - lo) * (sorted[hi] - sorted[lo]));
  }
  for (double d : sorted) out.mean += d / trials;
  return out;
}

}  // namespace orderon
