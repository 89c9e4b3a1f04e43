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

#include "hamdecomp/tournament.hpp"

#include <bit>
#include <string>

#include "hamdecomp/error.hpp"

namespace hamdecomp {

namespace {

std::string edge_name(VertexId from, VertexId to) {
  return std::to_string(from.label) + "->" + std::to_string(to.label);
}

}  // namespace

void require_valid_order(int m) {
  if (m < 3 || m % 2 == 0) {
    throw InvalidOrderError("invalid order " + std::to_string(m) +
                            ": expected an odd integer >= 3");
  }
}

void require_vertex(int m, VertexId v) {
  if (v.label < 1 || v.label > m) {
    throw VertexRangeError("vertex " + std::to_string(v.label) + " out of range 1.." +
                           std::to_string(m));
  }
}

EdgeSet::EdgeSet(int order) : order_(order) {
  if (order < 0) throw InvalidOrderError("negative order");
  words_per_row_ = (static_cast<std::size_t>(order) + 63) / 64;
  bits_.assign(words_per_row_ * static_cast<std::size_t>(order), 0);
}

void EdgeSet::check(VertexId v) const { require_vertex(order_, v); }

std::size_t EdgeSet::bit_index(VertexId from, VertexId to) const {
  check(from);
  check(to);
  return static_cast<std::size_t>(from.label - 1) * words_per_row_ * 64 +
         static_cast<std::size_t>(to.label - 1);
}

bool EdgeSet::contains(VertexId from, VertexId to) const {
  const std::size_t bit = bit_index(from, to);
  return (bits_[bit / 64] >> (bit % 64)) & 1U;
}

bool EdgeSet::insert(const DirectedEdge& e) {
  const std::size_t bit = bit_index(e.from, e.to);
  std::uint64_t& word = bits_[bit / 64];
  const std::uint64_t mask = std::uint64_t{1} << (bit % 64);
  if (word & mask) return false;
  word |= mask;
  ++count_;
  return true;
}

bool EdgeSet::erase(const DirectedEdge& e) {
  const std::size_t bit = bit_index(e.from, e.to);
  std::uint64_t& word = bits_[bit / 64];
  const std::uint64_t mask = std::uint64_t{1} << (bit % 64);
  if (!(word & mask)) return false;
  word &= ~mask;
  --count_;
  return true;
}

std::vector<DirectedEdge> EdgeSet::edges() const {
  std::vector<DirectedEdge> out;
  out.reserve(count_);
  for (int i = 0; i < order_; ++i) {
    for (std::size_t w = 0; w < words_per_row_; ++w) {
      std::uint64_t word = bits_[static_cast<std::size_t>(i) * words_per_row_ + w];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        word &= word - 1;
        out.push_back({VertexId{i + 1}, VertexId{static_cast<int>(w * 64) + bit + 1}});
      }
    }
  }
  return out;
}

Tournament Tournament::from_edges(EdgeSet edges) {
  const int m = edges.order();
  require_valid_order(m);
  for (int i = 1; i <= m; ++i) {
    const VertexId vi{i};
    if (edges.contains(vi, vi)) {
      throw InvalidTournamentError("loop at vertex " + std::to_string(i));
    }
    for (int j = i + 1; j <= m; ++j) {
      const VertexId vj{j};
      const bool forward = edges.contains(vi, vj);
      const bool backward = edges.contains(vj, vi);
      if (forward && backward) {
        throw InvalidTournamentError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") is oriented both ways");
      }
      if (!forward && !backward) {
        throw InvalidTournamentError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") has no edge");
      }
    }
  }
  return Tournament(std::move(edges));
}

std::vector<VertexId> Tournament::out_neighbors(VertexId v) const {
  require_vertex(order(), v);
  std::vector<VertexId> out;
  for (int j = 1; j <= order(); ++j) {
    if (has_edge(v, VertexId{j})) out.push_back(VertexId{j});
  }
  return out;
}

std::vector<VertexId> Tournament::in_neighbors(VertexId v) const {
  require_vertex(order(), v);
  std::vector<VertexId> out;
  for (int i = 1; i <= order(); ++i) {
    if (has_edge(VertexId{i}, v)) out.push_back(VertexId{i});
  }
  return out;
}

Tournament build_leading_tournament(int m) {
  require_valid_order(m);
  const int n = (m - 1) / 2;
  EdgeSet edges(m);
  for (int i = 1; i <= m; ++i) {
    for (int d = 1; d <= n; ++d) {
      edges.insert({VertexId{i}, VertexId{(i - 1 + d) % m + 1}});
    }
  }
  return Tournament::from_edges(std::move(edges));
}

Didegree didegree(const Tournament& t, VertexId v) {
  require_vertex(t.order(), v);
  Didegree d;
  for (int u = 1; u <= t.order(); ++u) {
    if (t.has_edge(VertexId{u}, v)) ++d.in_degree;
    if (t.has_edge(v, VertexId{u})) ++d.out_degree;
  }
  return d;
}

bool is_diregular(const Tournament& t) {
  const Didegree expected{t.half(), t.half()};
  for (int v = 1; v <= t.order(); ++v) {
    if (didegree(t, VertexId{v}) != expected) return false;
  }
  return true;
}

EdgeType edge_type(const Tournament& t, const DirectedEdge& e) {
  const int m = t.order();
  require_vertex(m, e.from);
  require_vertex(m, e.to);
  if (!t.has_edge(e)) {
    throw EdgeError("edge " + edge_name(e.from, e.to) + " is not in the tournament");
  }
  const int distance = ((e.to.label - e.from.label) % m + m) % m;
  if (distance < 1 || distance > t.half()) {
    throw EdgeError("edge " + edge_name(e.from, e.to) + " has cyclic distance " +
                    std::to_string(distance) + " > " + std::to_string(t.half()) +
                    "; the tournament is not a leading tournament");
  }
  return EdgeType{distance};
}

std::vector<DirectedEdge> edges_of_type(const Tournament& t, EdgeType ty) {
  const int m = t.order();
  if (ty.distance < 1 || ty.distance > t.half()) {
    throw StepError("edge type " + std::to_string(ty.distance) + " outside 1.." +
                    std::to_string(t.half()));
  }
  std::vector<DirectedEdge> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const DirectedEdge e{VertexId{i}, VertexId{(i - 1 + ty.distance) % m + 1}};
    if (!t.has_edge(e)) {
      throw EdgeError("edge " + edge_name(e.from, e.to) +
                      " missing; the tournament is not a leading tournament");
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace hamdecomp
