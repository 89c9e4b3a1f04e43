// Copyright 2026 The hamdecomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "hamdecomp/packing.hpp"

namespace hamdecomp {

// Placement of a centre vertex (label 1) and 2n circle vertices for order
// m = 2n + 1. `circle_positions` lists labels 2..m in clockwise order starting
// at 2: odd labels 3, 5, ..., 2n - 1, 2n + 1 run clockwise from 2, even labels
// 4, 6, ..., 2n run anticlockwise, and 2n + 1 sits opposite 2.
struct RotationLayout {
  int order = 0;
  std::vector<VertexId> circle_positions;

  friend bool operator==(const RotationLayout&, const RotationLayout&) = default;
};

RotationLayout rotation_layout(int m);

// Rotation of the circle by one position clockwise (angle pi/n); fixes the
// centre. Stored as a 1-based image table.
class RotationPermutation {
 public:
  RotationPermutation() = default;
  explicit RotationPermutation(std::vector<VertexId> images);

  int order() const noexcept { return static_cast<int>(images_.size()); }
  VertexId operator()(VertexId v) const;
  RotationPermutation power(int k) const;
  bool is_identity() const;

  friend bool operator==(const RotationPermutation&, const RotationPermutation&) = default;

 private:
  std::vector<VertexId> images_;
};

// (1, 2, ..., m): centre -> 2, the zigzag 2 -> 3 -> ... -> m across the
// circle, and m -> centre.
HamiltonCircuit base_circuit(int m);

RotationPermutation rotation_permutation(int m);

// circuit_k = sigma^k(base) for k = 0..n-1, rooted at 1. Edge-disjoint, and
// no two circuits use the same unordered pair.
PackingResult rotation_decomposition(int m);

// The diregular tournament formed by the union of rotation_decomposition(m).
Tournament rotation_tournament(int m);

}  // namespace hamdecomp
