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

#include "hamdecomp/tournament.hpp"

namespace hamdecomp {

// A step value alpha in 1..n for order m = 2n + 1.
struct StepValue {
  int alpha = 0;
  int order = 0;

  // Throws InvalidOrderError / StepError.
  static StepValue make(int order, int alpha);

  friend constexpr auto operator<=>(const StepValue&, const StepValue&) = default;
};

// A directed cycle through every vertex exactly once, stored rooted at its
// smallest label. The closing edge (last -> first) is implicit.
class HamiltonCircuit {
 public:
  // Throws InvalidOrderError, VertexRangeError, or EdgeError (wrong length or
  // repeated vertex).
  HamiltonCircuit(int order, std::vector<VertexId> vertices);

  int order() const noexcept { return static_cast<int>(vertices_.size()); }
  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  std::vector<int> labels() const;
  std::vector<DirectedEdge> edges() const;

  friend auto operator<=>(const HamiltonCircuit&, const HamiltonCircuit&) = default;

 private:
  std::vector<VertexId> vertices_;
};

// A directed cycle on distinct vertices, rooted at its smallest label.
using Cycle = std::vector<VertexId>;

// Rotates a cycle so its smallest label comes first.
Cycle canonical_cycle(Cycle cycle);

// Consecutive edges of a cyclic vertex sequence, including the closing edge.
std::vector<DirectedEdge> cycle_edges(const Cycle& cycle);

// The disjoint cycles generated by one step value: gcd(alpha, m) orbits of
// x -> x + alpha (mod m), ordered by root.
struct CycleSystem {
  StepValue step;
  std::vector<Cycle> cycles;

  bool is_hamiltonian() const { return cycles.size() == 1; }

  friend bool operator==(const CycleSystem&, const CycleSystem&) = default;
};

// Edge-disjoint Hamilton circuits plus any short cycles left over. A result
// with an empty residual and n circuits is a Hamilton decomposition.
struct PackingResult {
  int order = 0;
  std::vector<HamiltonCircuit> circuits;
  std::vector<CycleSystem> residual;

  bool is_decomposition() const {
    return residual.empty() && static_cast<int>(circuits.size()) == (order - 1) / 2;
  }

  // Every edge of every circuit and residual cycle, in listing order
  // (duplicates preserved).
  std::vector<DirectedEdge> all_edges() const;

  friend bool operator==(const PackingResult&, const PackingResult&) = default;
};

}  // namespace hamdecomp
