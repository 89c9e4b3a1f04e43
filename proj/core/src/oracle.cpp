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

#include "hamdecomp/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "hamdecomp/error.hpp"

namespace hamdecomp {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(int v) { return Mask{1} << v; }

std::string edge_name(const DirectedEdge& e) {
  return std::to_string(e.from.label) + "->" + std::to_string(e.to.label);
}

// A subtree root handed to a worker: a prefix of the first circuit, and how
// many nodes a sequential run visits before reaching it outside earlier
// subtrees.
struct Task {
  std::vector<int> path;
  std::uint64_t nodes_before = 0;
};

// Backtracking kernel over 0-based vertices. Not thread-safe; each worker owns
// one.
class SearchKernel {
 public:
  enum class Result { kFound, kExhausted, kAborted };

  struct Limits {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    std::optional<Clock::time_point> deadline;
    const std::atomic<std::size_t>* winner = nullptr;  // stop if winner < own_index
    std::size_t own_index = 0;
  };

  SearchKernel(const Tournament& t, Limits limits) : m_(t.order()), n_(t.half()), limits_(limits) {
    full_ = m_ == 64 ? ~Mask{0} : bit(m_) - 1;
    out_avail_.assign(static_cast<std::size_t>(m_), 0);
    in_avail_.assign(static_cast<std::size_t>(m_), 0);
    for (const DirectedEdge& e : t.edges().edges()) {
      out_avail_[idx(e.from.label - 1)] |= bit(e.to.label - 1);
      in_avail_[idx(e.to.label - 1)] |= bit(e.from.label - 1);
    }
  }

  Result run() { return next_circuit(); }

  // Explores the first circuit only down to `depth` vertices and records each
  // path of that length as a task instead of descending into it.
  Result collect(std::size_t depth, std::vector<Task>& tasks) {
    collect_depth_ = depth;
    tasks_ = &tasks;
    const Result r = next_circuit();
    tasks_ = nullptr;
    return r;
  }

  Result run_task(const Task& task) {
    for (std::size_t k = 0; k + 1 < task.path.size(); ++k) use(task.path[k], task.path[k + 1]);
    path_ = task.path;
    visited_ = 0;
    for (int v : path_) visited_ |= bit(v);
    return extend();
  }

  std::uint64_t nodes() const { return nodes_; }
  bool hit_node_limit() const { return hit_node_limit_; }
  const std::vector<std::vector<int>>& solution() const { return solution_; }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  void use(int a, int b) {
    out_avail_[idx(a)] &= ~bit(b);
    in_avail_[idx(b)] &= ~bit(a);
  }
  void release(int a, int b) {
    out_avail_[idx(a)] |= bit(b);
    in_avail_[idx(b)] |= bit(a);
  }

  bool should_stop() {
    if ((nodes_ & 0xFFF) != 0) return false;
    if (limits_.winner != nullptr && limits_.winner->load(std::memory_order_relaxed) < limits_.own_index) {
      return true;
    }
    return limits_.deadline && Clock::now() >= *limits_.deadline;
  }

  Result next_circuit() {
    if (static_cast<int>(circuits_.size()) == n_) {
      solution_ = circuits_;
      return Result::kFound;
    }
    const int needed = n_ - static_cast<int>(circuits_.size());
    for (int v = 0; v < m_; ++v) {
      if (std::popcount(out_avail_[idx(v)]) < needed || std::popcount(in_avail_[idx(v)]) < needed) {
        return Result::kExhausted;
      }
    }
    // Circuits are listed in lexicographic order and each one uses a distinct
    // out-edge of vertex 1, so the next circuit must take the smallest unused
    // one; skipping it would leave that edge to no later circuit.
    const int second = std::countr_zero(out_avail_[0]);
    std::vector<int> saved_path = std::move(path_);
    const Mask saved_visited = visited_;
    path_ = {0, second};
    visited_ = bit(0) | bit(second);
    use(0, second);
    const Result r = extend();
    release(0, second);
    path_ = std::move(saved_path);
    visited_ = saved_visited;
    return r;
  }

  Result extend() {
    if (tasks_ != nullptr && circuits_.empty() && path_.size() == collect_depth_) {
      tasks_->push_back({path_, nodes_});
      return Result::kExhausted;
    }
    if (nodes_ >= limits_.max_nodes) {
      hit_node_limit_ = true;
      return Result::kAborted;
    }
    ++nodes_;
    if (should_stop()) return Result::kAborted;

    const int cur = path_.back();
    if (static_cast<int>(path_.size()) == m_) {
      if (!(out_avail_[idx(cur)] & bit(0))) return Result::kExhausted;
      use(cur, 0);
      circuits_.push_back(path_);
      const Result r = next_circuit();
      circuits_.pop_back();
      release(cur, 0);
      return r;
    }

    const Mask unvisited = full_ & ~visited_;
    // Some unvisited vertex must close the circuit back to vertex 1, and each
    // unvisited vertex still needs an unused way in and out.
    if (!(in_avail_[0] & unvisited)) return Result::kExhausted;
    for (Mask rest = unvisited; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (!(in_avail_[idx(u)] & (unvisited | bit(cur)))) return Result::kExhausted;
      if (!(out_avail_[idx(u)] & (unvisited | bit(0)))) return Result::kExhausted;
    }

    for (Mask cand = out_avail_[idx(cur)] & unvisited; cand != 0; cand &= cand - 1) {
      const int next = std::countr_zero(cand);
      use(cur, next);
      path_.push_back(next);
      visited_ |= bit(next);
      const Result r = extend();
      visited_ &= ~bit(next);
      path_.pop_back();
      release(cur, next);
      if (r != Result::kExhausted) return r;
    }
    return Result::kExhausted;
  }

  int m_;
  int n_;
  Limits limits_;
  Mask full_ = 0;
  std::vector<Mask> out_avail_;
  std::vector<Mask> in_avail_;
  std::vector<int> path_;
  Mask visited_ = 0;
  std::vector<std::vector<int>> circuits_;
  std::vector<std::vector<int>> solution_;
  std::uint64_t nodes_ = 0;
  bool hit_node_limit_ = false;
  std::size_t collect_depth_ = 0;
  std::vector<Task>* tasks_ = nullptr;
};

PackingResult to_packing(int m, const std::vector<std::vector<int>>& circuits) {
  PackingResult p{m, {}, {}};
  for (const auto& c : circuits) {
    std::vector<VertexId> vertices;
    vertices.reserve(c.size());
    for (int v : c) vertices.push_back(VertexId{v + 1});
    p.circuits.emplace_back(m, std::move(vertices));
  }
  return p;
}

struct TaskResult {
  SearchKernel::Result result = SearchKernel::Result::kAborted;
  std::uint64_t nodes = 0;
  bool hit_node_limit = false;
  std::vector<std::vector<int>> solution;
};

SearchOutcome search_parallel(const Tournament& t, const SearchKernel::Limits& limits,
                              unsigned jobs) {
  const int m = t.order();
  const std::uint64_t max_nodes = limits.max_nodes;
  SearchOutcome outcome;

  std::vector<Task> tasks;
  SearchKernel prefix(t, limits);
  const auto prefix_result = prefix.collect(static_cast<std::size_t>(std::min(m, 5)), tasks);
  if (prefix_result == SearchKernel::Result::kAborted) {
    outcome.nodes_explored = prefix.nodes();
    return outcome;
  }

  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> winner{std::numeric_limits<std::size_t>::max()};
  {
    std::vector<std::jthread> workers;
    const unsigned count = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
    for (unsigned w = 0; w < count; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
          if (winner.load() < i) continue;
          SearchKernel::Limits local = limits;
          local.winner = &winner;
          local.own_index = i;
          SearchKernel kernel(t, local);
          TaskResult& out = results[i];
          out.result = kernel.run_task(tasks[i]);
          out.nodes = kernel.nodes();
          out.hit_node_limit = kernel.hit_node_limit();
          if (out.result == SearchKernel::Result::kFound) {
            out.solution = kernel.solution();
            std::size_t current = winner.load();
            while (i < current && !winner.compare_exchange_weak(current, i)) {
            }
          }
        }
      });
    }
  }

  // Replay the sequential visiting order: prefix nodes before task w, then
  // every earlier subtree in full, then task w itself.
  std::uint64_t earlier_subtrees = 0;
  for (std::size_t w = 0; w < tasks.size(); ++w) {
    const TaskResult& r = results[w];
    const std::uint64_t before = tasks[w].nodes_before + earlier_subtrees;
    if (r.result == SearchKernel::Result::kAborted || before + r.nodes > max_nodes) {
      const bool node_limited = r.hit_node_limit || before + r.nodes > max_nodes;
      outcome.nodes_explored = node_limited ? max_nodes : before + r.nodes;
      return outcome;
    }
    if (r.result == SearchKernel::Result::kFound) {
      outcome.status = SearchStatus::kDecomposed;
      outcome.nodes_explored = before + r.nodes;
      outcome.decomposition = to_packing(m, r.solution);
      return outcome;
    }
    earlier_subtrees += r.nodes;
  }
  const std::uint64_t total = prefix.nodes() + earlier_subtrees;
  if (total > max_nodes) {
    outcome.nodes_explored = max_nodes;
    return outcome;
  }
  outcome.status = SearchStatus::kExhausted;
  outcome.nodes_explored = total;
  return outcome;
}

}  // namespace

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kDecomposed:
      return "decomposed";
    case SearchStatus::kExhausted:
      return "exhausted-no-decomposition";
    case SearchStatus::kBudgetExceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

std::optional<SearchStatus> parse_search_status(std::string_view text) {
  for (auto s : {SearchStatus::kDecomposed, SearchStatus::kExhausted, SearchStatus::kBudgetExceeded}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

SearchOutcome find_decomposition(const Tournament& t, const SearchBudget& budget,
                                 const SearchOptions& options) {
  const int m = t.order();
  if (m > kMaxSearchOrder) {
    throw SearchInputError("order " + std::to_string(m) + " exceeds the search limit of " +
                           std::to_string(kMaxSearchOrder));
  }
  if (m > kExhaustiveOrderCeiling && budget.unlimited()) {
    throw SearchInputError("order " + std::to_string(m) + " exceeds " +
                           std::to_string(kExhaustiveOrderCeiling) +
                           "; a node or time budget is required");
  }
  if (!is_diregular(t)) throw SearchInputError("tournament is not diregular");

  SearchKernel::Limits limits;
  if (budget.max_nodes) limits.max_nodes = *budget.max_nodes;
  if (budget.time_limit) limits.deadline = Clock::now() + *budget.time_limit;

  SearchOutcome outcome;
  if (options.jobs <= 1) {
    SearchKernel kernel(t, limits);
    const auto r = kernel.run();
    outcome.nodes_explored = kernel.nodes();
    if (r == SearchKernel::Result::kFound) {
      outcome.status = SearchStatus::kDecomposed;
      outcome.decomposition = to_packing(m, kernel.solution());
    } else if (r == SearchKernel::Result::kExhausted) {
      outcome.status = SearchStatus::kExhausted;
    }
  } else {
    outcome = search_parallel(t, limits, options.jobs);
  }

  if (outcome.decomposition && !verify_decomposition(t, *outcome.decomposition)) {
    throw std::logic_error("search produced a decomposition that does not verify");
  }
  return outcome;
}

VerificationReport verify_decomposition(const Tournament& t, const PackingResult& p) {
  VerificationReport report;
  auto& diag = report.diagnostics;
  const int m = t.order();
  if (p.order != m) {
    diag.push_back("packing order " + std::to_string(p.order) + " differs from tournament order " +
                   std::to_string(m));
    return report;
  }

  // Owner of each edge, for duplicate diagnostics.
  std::map<DirectedEdge, std::string> owner;
  auto claim = [&](const DirectedEdge& e, const std::string& who) {
    if (e.from.label < 1 || e.from.label > m || e.to.label < 1 || e.to.label > m) {
      diag.push_back(who + ": vertex out of range in edge " + edge_name(e));
      return;
    }
    if (!t.has_edge(e)) {
      diag.push_back(who + ": edge " + edge_name(e) + " is not in the tournament");
      return;
    }
    auto [it, inserted] = owner.emplace(e, who);
    if (!inserted) diag.push_back("duplicate edge " + edge_name(e) + " in " + it->second + " and " + who);
  };

  for (std::size_t k = 0; k < p.circuits.size(); ++k) {
    const HamiltonCircuit& c = p.circuits[k];
    const std::string who = "circuit " + std::to_string(k + 1);
    if (c.order() != m) {
      diag.push_back(who + ": visits " + std::to_string(c.order()) + " vertices, expected " +
                     std::to_string(m));
      continue;
    }
    for (const DirectedEdge& e : c.edges()) claim(e, who);
  }
  for (std::size_t s = 0; s < p.residual.size(); ++s) {
    for (std::size_t k = 0; k < p.residual[s].cycles.size(); ++k) {
      const Cycle& cycle = p.residual[s].cycles[k];
      const std::string who = "residual " + std::to_string(s + 1) + " cycle " + std::to_string(k + 1);
      std::vector<VertexId> sorted = cycle;
      std::sort(sorted.begin(), sorted.end());
      if (cycle.size() < 2 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        diag.push_back(who + ": not a simple cycle");
        continue;
      }
      for (const DirectedEdge& e : cycle_edges(cycle)) claim(e, who);
    }
  }
  for (const DirectedEdge& e : t.edges().edges()) {
    if (!owner.contains(e)) diag.push_back("edge " + edge_name(e) + " is not covered");
  }
  report.ok = diag.empty();
  return report;
}

std::vector<std::vector<VertexId>> greedy_extend_circuit(const Tournament& t,
                                                         const EdgeSet& used_edges,
                                                         const std::vector<VertexId>& partial) {
  if (partial.empty() || partial.front() != VertexId{1}) {
    throw EdgeError("partial circuit must start at vertex 1");
  }
  std::vector<bool> on_path(static_cast<std::size_t>(t.order()) + 1, false);
  for (VertexId v : partial) {
    require_vertex(t.order(), v);
    on_path[static_cast<std::size_t>(v.label)] = true;
  }
  std::vector<std::vector<VertexId>> out;
  const VertexId last = partial.back();
  for (VertexId next : t.out_neighbors(last)) {
    if (on_path[static_cast<std::size_t>(next.label)] || used_edges.contains(last, next)) continue;
    auto extended = partial;
    extended.push_back(next);
    out.push_back(std::move(extended));
  }
  return out;
}

bool closes_circuit(const Tournament& t, const EdgeSet& used_edges,
                    const std::vector<VertexId>& partial) {
  if (static_cast<int>(partial.size()) != t.order() || partial.front() != VertexId{1}) return false;
  const DirectedEdge closing{partial.back(), VertexId{1}};
  return t.has_edge(closing) && !used_edges.contains(closing);
}

}  // namespace hamdecomp
