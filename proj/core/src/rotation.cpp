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

#include "hamdecomp/rotation.hpp"

#include <string>

#include "hamdecomp/error.hpp"

namespace hamdecomp {

RotationLayout rotation_layout(int m) {
  require_valid_order(m);
  const int n = (m - 1) / 2;
  RotationLayout layout{m, {}};
  layout.circle_positions.reserve(static_cast<std::size_t>(2 * n));
  layout.circle_positions.push_back(VertexId{2});
  for (int label = 3; label <= m; label += 2) layout.circle_positions.push_back(VertexId{label});
  for (int label = 2 * n; label >= 4; label -= 2) layout.circle_positions.push_back(VertexId{label});
  return layout;
}

RotationPermutation::RotationPermutation(std::vector<VertexId> images)
    : images_(std::move(images)) {
  const int m = order();
  std::vector<bool> hit(static_cast<std::size_t>(m) + 1, false);
  for (VertexId v : images_) {
    require_vertex(m, v);
    if (hit[static_cast<std::size_t>(v.label)]) {
      throw VertexRangeError("permutation image " + std::to_string(v.label) + " repeated");
    }
    hit[static_cast<std::size_t>(v.label)] = true;
  }
}

VertexId RotationPermutation::operator()(VertexId v) const {
  require_vertex(order(), v);
  return images_[static_cast<std::size_t>(v.label - 1)];
}

RotationPermutation RotationPermutation::power(int k) const {
  if (k < 0) throw StepError("negative permutation power");
  std::vector<VertexId> images(images_.size());
  for (int v = 1; v <= order(); ++v) {
    VertexId image{v};
    for (int i = 0; i < k; ++i) image = (*this)(image);
    images[static_cast<std::size_t>(v - 1)] = image;
  }
  return RotationPermutation(std::move(images));
}

bool RotationPermutation::is_identity() const {
  for (int v = 1; v <= order(); ++v) {
    if (images_[static_cast<std::size_t>(v - 1)].label != v) return false;
  }
  return true;
}

HamiltonCircuit base_circuit(int m) {
  require_valid_order(m);
  std::vector<VertexId> vertices;
  vertices.reserve(static_cast<std::size_t>(m));
  for (int label = 1; label <= m; ++label) vertices.push_back(VertexId{label});
  return HamiltonCircuit(m, std::move(vertices));
}

RotationPermutation rotation_permutation(int m) {
  const RotationLayout layout = rotation_layout(m);
  const auto& ring = layout.circle_positions;
  std::vector<VertexId> images(static_cast<std::size_t>(m));
  images[0] = VertexId{1};
  for (std::size_t pos = 0; pos < ring.size(); ++pos) {
    images[static_cast<std::size_t>(ring[pos].label - 1)] = ring[(pos + 1) % ring.size()];
  }
  return RotationPermutation(std::move(images));
}

PackingResult rotation_decomposition(int m) {
  const HamiltonCircuit base = base_circuit(m);
  const RotationPermutation sigma = rotation_permutation(m);
  PackingResult result{m, {}, {}};
  std::vector<VertexId> current = base.vertices();
  for (int k = 0; k < (m - 1) / 2; ++k) {
    result.circuits.emplace_back(m, current);
    for (VertexId& v : current) v = sigma(v);
  }
  return result;
}

Tournament rotation_tournament(int m) {
  const PackingResult packing = rotation_decomposition(m);
  EdgeSet edges(m);
  for (const DirectedEdge& e : packing.all_edges()) {
    if (!edges.insert(e)) {
      throw InvalidTournamentError("rotated circuits share edge " + std::to_string(e.from.label) +
                                   "->" + std::to_string(e.to.label));
    }
  }
  return Tournament::from_edges(std::move(edges));
}

}  // namespace hamdecomp
