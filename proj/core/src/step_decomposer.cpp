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

#include "hamdecomp/step_decomposer.hpp"

#include <numeric>
#include <string>

#include "hamdecomp/error.hpp"

namespace hamdecomp {

namespace {

int advance(int label, int alpha, int m) { return (label - 1 + alpha) % m + 1; }

HamiltonCircuit step_circuit(int m, int alpha) {
  std::vector<VertexId> vertices;
  vertices.reserve(static_cast<std::size_t>(m));
  int label = 1;
  for (int k = 0; k < m; ++k) {
    vertices.push_back(VertexId{label});
    label = advance(label, alpha, m);
  }
  return HamiltonCircuit(m, std::move(vertices));
}

}  // namespace

bool is_prime(int value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (int d = 3; d <= value / d; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

std::vector<int> step_sequence(int m, int alpha) {
  const StepValue step = StepValue::make(m, alpha);
  if (std::gcd(step.alpha, m) != 1) {
    throw StepError("step " + std::to_string(step.alpha) + " shares a factor with order " +
                    std::to_string(m) + "; it generates several short cycles, not a sequence");
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    out.push_back(static_cast<int>((static_cast<long long>(k) * step.alpha) % m) + 1);
  }
  return out;
}

CycleSystem step_cycles(int m, int alpha) {
  CycleSystem system{StepValue::make(m, alpha), {}};
  const int g = std::gcd(alpha, m);
  // Each residue class mod g is one orbit, and its smallest member is the root.
  for (int root = 1; root <= g; ++root) {
    Cycle cycle;
    cycle.reserve(static_cast<std::size_t>(m / g));
    int label = root;
    do {
      cycle.push_back(VertexId{label});
      label = advance(label, alpha, m);
    } while (label != root);
    system.cycles.push_back(std::move(cycle));
  }
  return system;
}

PackingResult decompose_prime(int m) {
  require_valid_order(m);
  if (!is_prime(m)) {
    throw CompositeOrderError("order " + std::to_string(m) +
                              " is composite; step circuits only decompose prime orders "
                              "(use `pack` for the residual analysis or `search`)");
  }
  PackingResult result{m, {}, {}};
  for (int alpha = 1; alpha <= (m - 1) / 2; ++alpha) {
    result.circuits.push_back(step_circuit(m, alpha));
  }
  return result;
}

PackingResult pack_leading(int m) {
  require_valid_order(m);
  PackingResult result{m, {}, {}};
  for (int alpha = 1; alpha <= (m - 1) / 2; ++alpha) {
    if (std::gcd(alpha, m) == 1) {
      result.circuits.push_back(step_circuit(m, alpha));
    } else {
      result.residual.push_back(step_cycles(m, alpha));
    }
  }
  return result;
}

}  // namespace hamdecomp
