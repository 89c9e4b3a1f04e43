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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hamdecomp {

// A vertex label in 1..m. Labels are 1-based on every public surface.
struct VertexId {
  int label = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

// (in-degree, out-degree) of a single vertex.
struct Didegree {
  int in_degree = 0;
  int out_degree = 0;

  friend constexpr bool operator==(Didegree, Didegree) = default;
};

struct DirectedEdge {
  VertexId from;
  VertexId to;

  friend constexpr auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

// Cyclic distance (to - from) mod m of an edge in a leading tournament; always
// in 1..n for m = 2n + 1.
struct EdgeType {
  int distance = 0;

  friend constexpr auto operator<=>(EdgeType, EdgeType) = default;
};

// Dense bit matrix of directed edges over vertices 1..order.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int order);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(VertexId from, VertexId to) const;
  bool contains(const DirectedEdge& e) const { return contains(e.from, e.to); }

  // Returns false if the edge was already present.
  bool insert(const DirectedEdge& e);
  // Returns false if the edge was not present.
  bool erase(const DirectedEdge& e);

  // All edges, sorted by (from, to).
  std::vector<DirectedEdge> edges() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::size_t bit_index(VertexId from, VertexId to) const;
  void check(VertexId v) const;

  int order_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
  std::size_t count_ = 0;
};

// A complete orientation of K_m for odd m >= 3: no loops and exactly one
// direction per unordered pair. Immutable once built; every constructor
// validates the axioms eagerly.
class Tournament {
 public:
  // Throws InvalidOrderError or InvalidTournamentError.
  static Tournament from_edges(EdgeSet edges);

  int order() const noexcept { return edges_.order(); }
  // n for order m = 2n + 1.
  int half() const noexcept { return (order() - 1) / 2; }

  bool has_edge(VertexId from, VertexId to) const { return edges_.contains(from, to); }
  bool has_edge(const DirectedEdge& e) const { return edges_.contains(e); }

  std::vector<VertexId> out_neighbors(VertexId v) const;
  std::vector<VertexId> in_neighbors(VertexId v) const;

  const EdgeSet& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  explicit Tournament(EdgeSet edges) : edges_(std::move(edges)) {}

  EdgeSet edges_;
};

// Throws InvalidOrderError unless m is odd and >= 3.
void require_valid_order(int m);

// Throws VertexRangeError unless 1 <= v.label <= m.
void require_vertex(int m, VertexId v);

// The leading diregular tournament: i -> j iff (j - i) mod m lies in 1..n.
Tournament build_leading_tournament(int m);

Didegree didegree(const Tournament& t, VertexId v);

// True iff every vertex has didegree (n, n).
bool is_diregular(const Tournament& t);

// Distance type of an edge of a leading tournament. Throws EdgeError if the
// edge is absent or its distance exceeds n.
EdgeType edge_type(const Tournament& t, const DirectedEdge& e);

// The m edges i -> i + ty (mod m), ordered by source. Throws StepError if ty
// is outside 1..n and EdgeError if t does not contain them (t not leading).
std::vector<DirectedEdge> edges_of_type(const Tournament& t, EdgeType ty);

}  // namespace hamdecomp
