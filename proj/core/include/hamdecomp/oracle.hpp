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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamdecomp/packing.hpp"

namespace hamdecomp {

// Largest order the search kernel handles (vertex sets are 64-bit masks).
inline constexpr int kMaxSearchOrder = 63;
// Largest order searched without an explicit budget.
inline constexpr int kExhaustiveOrderCeiling = 11;

struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> time_limit;

  bool unlimited() const { return !max_nodes && !time_limit; }
};

enum class SearchStatus { kDecomposed, kExhausted, kBudgetExceeded };

// "decomposed", "exhausted-no-decomposition", "budget-exceeded".
std::string_view to_string(SearchStatus status);
std::optional<SearchStatus> parse_search_status(std::string_view text);

struct SearchOutcome {
  SearchStatus status = SearchStatus::kBudgetExceeded;
  // Present iff status == kDecomposed.
  std::optional<PackingResult> decomposition;
  std::uint64_t nodes_explored = 0;
};

struct SearchOptions {
  // Worker threads. Any value yields the same outcome and node count as 1,
  // except when a time limit cuts the run short.
  unsigned jobs = 1;
};

// Depth-first search for n edge-disjoint Hamilton circuits covering t.
//
// Every circuit is rooted at vertex 1 and circuits are generated in
// lexicographic order, so the k-th circuit always leaves vertex 1 along its
// k-th smallest out-edge. Successors are tried in ascending label order. The
// first decomposition in that canonical order is returned; a kExhausted
// status proves that t has no Hamilton decomposition.
//
// A node is one partial path visited by the kernel. With a node budget the
// search stops after max_nodes nodes and reports exactly max_nodes.
//
// Throws SearchInputError if t is not diregular, if t.order() exceeds
// kMaxSearchOrder, or if t.order() exceeds kExhaustiveOrderCeiling and the
// budget is unlimited.
SearchOutcome find_decomposition(const Tournament& t, const SearchBudget& budget,
                                 const SearchOptions& options = {});

struct VerificationReport {
  bool ok = false;
  // First entry names the first violated condition.
  std::vector<std::string> diagnostics;

  explicit operator bool() const { return ok; }
};

// Checks that every circuit is a Hamilton circuit of t, that circuits and
// residual cycles are pairwise edge-disjoint, and that together they cover
// exactly E(t).
VerificationReport verify_decomposition(const Tournament& t, const PackingResult& p);

// One backtracking step: the paths obtained by appending one successor of
// partial.back() along an edge of t that is not in used_edges and does not
// revisit a vertex. Successors come out in ascending label order. partial
// must start at vertex 1.
std::vector<std::vector<VertexId>> greedy_extend_circuit(const Tournament& t,
                                                         const EdgeSet& used_edges,
                                                         const std::vector<VertexId>& partial);

// True when partial visits all m vertices and the closing edge back to
// vertex 1 is in t and unused.
bool closes_circuit(const Tournament& t, const EdgeSet& used_edges,
                    const std::vector<VertexId>& partial);

}  // namespace hamdecomp
