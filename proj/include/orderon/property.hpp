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

#include <vector>

#include "orderon/graph.hpp"

namespace orderon {

/// Hereditary property of ordered graphs given by forbidden induced ordered
/// subgraphs. The threshold property (no u1 < u2 <= u3 < u4 with u1u2 a
/// non-edge and u3u4 an edge) is a builtin with a dedicated O(n^2) path.
class PropertySpec {
 public:
  enum class Kind { kForbiddenFamily, kThreshold };

  /// Throws kBadSpec when the family is empty or has a pattern with k < 2.
  static PropertySpec forbidden(std::vector<PatternGraph> family);
  static PropertySpec threshold();

  Kind kind() const noexcept { return kind_; }

  /// Forbidden patterns. For the threshold property this is its translation:
  /// 16 four-vertex patterns (u2 < u3) and 2 three-vertex ones (u2 = u3).
  const std::vector<PatternGraph>& patterns() const noexcept { return patterns_; }
  int max_pattern_size() const noexcept;

 private:
  PropertySpec(Kind kind, std::vector<PatternGraph> patterns) : kind_(kind), patterns_(std::move(patterns)) {}

  Kind kind_;
  std::vector<PatternGraph> patterns_;
};

std::vector<PatternGraph> threshold_forbidden_family();

}  // namespace orderon
