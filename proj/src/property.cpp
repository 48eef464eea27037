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

#include "orderon/property.hpp"

#include <algorithm>

#include "orderon/error.hpp"

namespace orderon {

PropertySpec PropertySpec::forbidden(std::vector<PatternGraph> family) {
  if (family.empty()) throw Error(ErrorCode::kBadSpec, "forbidden family is empty");
  for (const PatternGraph& f : family) {
    if (f.size() < 2) throw Error(ErrorCode::kBadSpec, "forbidden patterns need at least two vertices");
  }
  return PropertySpec(Kind::kForbiddenFamily, std::move(family));
}

PropertySpec PropertySpec::threshold() { return PropertySpec(Kind::kThreshold, threshold_forbidden_family()); }

int PropertySpec::max_pattern_size() const noexcept {
  int k = 0;
  for (const PatternGraph& f : patterns_) k = std::max(k, f.size());
  return k;
}

std::vector<PatternGraph> threshold_forbidden_family() {
  std::vector<PatternGraph> family;
  // u1 < u2 < u3 < u4: (0,1) absent, (2,3) present, remaining pairs free.
  const std::pair<int, int> free4[] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  for (unsigned m = 0; m < 16; ++m) {
    std::uint32_t mask = 1u << PatternGraph::pair_bit(2, 3);
    for (int b = 0; b < 4; ++b)
      if ((m >> b) & 1u) mask |= 1u << PatternGraph::pair_bit(free4[b].first, free4[b].second);
    family.emplace_back(4, mask);
  }
  // u1 < u2 = u3 < u4: (0,1) absent, (1,2) present, (0,2) free.
  for (unsigned m = 0; m < 2; ++m) {
    std::uint32_t mask = 1u << PatternGraph::pair_bit(1, 2);
    if (m) mask |= 1u << PatternGraph::pair_bit(0, 2);
    family.emplace_back(3, mask);
  }
  return family;
}

}  // namespace orderon
