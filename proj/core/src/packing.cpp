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

#include "hamdecomp/packing.hpp"

#include <algorithm>
#include <string>

#include "hamdecomp/error.hpp"

namespace hamdecomp {

StepValue StepValue::make(int order, int alpha) {
  require_valid_order(order);
  const int n = (order - 1) / 2;
  if (alpha < 1 || alpha > n) {
    throw StepError("step " + std::to_string(alpha) + " outside 1.." + std::to_string(n) +
                    " for order " + std::to_string(order));
  }
  return StepValue{alpha, order};
}

HamiltonCircuit::HamiltonCircuit(int order, std::vector<VertexId> vertices) {
  require_valid_order(order);
  if (static_cast<int>(vertices.size()) != order) {
    throw EdgeError("circuit has " + std::to_string(vertices.size()) + " vertices, expected " +
                    std::to_string(order));
  }
  std::vector<bool> seen(static_cast<std::size_t>(order) + 1, false);
  for (VertexId v : vertices) {
    require_vertex(order, v);
    if (seen[static_cast<std::size_t>(v.label)]) {
      throw EdgeError("circuit visits vertex " + std::to_string(v.label) + " twice");
    }
    seen[static_cast<std::size_t>(v.label)] = true;
  }
  vertices_ = canonical_cycle(std::move(vertices));
}

std::vector<int> HamiltonCircuit::labels() const {
  std::vector<int> out;
  out.reserve(vertices_.size());
  for (VertexId v : vertices_) out.push_back(v.label);
  return out;
}

std::vector<DirectedEdge> HamiltonCircuit::edges() const { return cycle_edges(vertices_); }

Cycle canonical_cycle(Cycle cycle) {
  if (!cycle.empty()) {
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  }
  return cycle;
}

std::vector<DirectedEdge> cycle_edges(const Cycle& cycle) {
  std::vector<DirectedEdge> out;
  out.reserve(cycle.size());
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    out.push_back({cycle[k], cycle[(k + 1) % cycle.size()]});
  }
  return out;
}

std::vector<DirectedEdge> PackingResult::all_edges() const {
  std::vector<DirectedEdge> out;
  for (const auto& c : circuits) {
    const auto e = c.edges();
    out.insert(out.end(), e.begin(), e.end());
  }
  for (const auto& system : residual) {
    for (const auto& cycle : system.cycles) {
      const auto e = cycle_edges(cycle);
      out.insert(out.end(), e.begin(), e.end());
    }
  }
  return out;
}

}  // namespace hamdecomp
