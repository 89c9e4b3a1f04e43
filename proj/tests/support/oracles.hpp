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

// Independent reference computations used only by tests. Nothing here calls
// into the code paths it is used to check.
#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hamdecomp::testing {

using LabelEdge = std::pair<int, int>;

inline int euclid_gcd(int a, int b) {
  while (b != 0) {
    const int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Leading tournament adjacency via the original two-case listing:
//   rule 1: row i points to i+1..i+n (the band above the diagonal, cut at m),
//   rule 2: row n+1+r (r = 1..n) also points to columns 1..r.
// Returns a 1-based (m+1)x(m+1) 0/1 table.
inline std::vector<std::vector<int>> two_case_adjacency(int m) {
  const int n = (m - 1) / 2;
  std::vector<std::vector<int>> a(static_cast<std::size_t>(m) + 1, std::vector<int>(static_cast<std::size_t>(m) + 1, 0));
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= i + n && j <= m; ++j) a[i][j] = 1;
  }
  for (int i = n + 2; i <= m; ++i) {
    for (int j = 1; j <= i - n - 1; ++j) a[i][j] = 1;
  }
  return a;
}

// Orbits of x -> x + alpha on Z_m found by marking residues, returned as
// 1-based cycles rooted at their minimum and sorted by root.
inline std::vector<std::vector<int>> orbit_enumeration(int m, int alpha) {
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < m; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    int x = start;
    while (!seen[x]) {
      seen[x] = true;
      orbit.push_back(x + 1);
      x = (x + alpha) % m;
    }
    orbits.push_back(orbit);
  }
  return orbits;
}

inline std::set<LabelEdge> leading_edge_set(int m) {
  std::set<LabelEdge> edges;
  const int n = (m - 1) / 2;
  for (int i = 0; i < m; ++i) {
    for (int d = 1; d <= n; ++d) edges.insert({i + 1, (i + d) % m + 1});
  }
  return edges;
}

inline std::vector<LabelEdge> cyclic_edges(const std::vector<int>& cycle) {
  std::vector<LabelEdge> out;
  for (std::size_t k = 0; k < cycle.size(); ++k) out.push_back({cycle[k], cycle[(k + 1) % cycle.size()]});
  return out;
}

// Exact-cover check: every cycle simple, no edge twice, union == expected.
inline bool covers_exactly(const std::vector<std::vector<int>>& cycles, const std::set<LabelEdge>& expected) {
  std::set<LabelEdge> seen;
  for (const auto& c : cycles) {
    if (std::set<int>(c.begin(), c.end()).size() != c.size()) return false;
    for (const auto& e : cyclic_edges(c)) {
      if (!seen.insert(e).second) return false;
    }
  }
  return seen == expected;
}

}  // namespace hamdecomp::testing
