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

// Deterministic trial division.
bool is_prime(int value);

// (1, 1 + alpha, 1 + 2 alpha, ..., 1) with entries kept in 1..m; length m + 1.
// Throws StepError when gcd(alpha, m) != 1 (use step_cycles instead).
std::vector<int> step_sequence(int m, int alpha);

// The gcd(alpha, m) orbits of x -> ((x - 1 + alpha) mod m) + 1, each rooted at
// its smallest vertex, sorted by root.
CycleSystem step_cycles(int m, int alpha);

// The n step circuits alpha = 1..n of the leading tournament of prime order m.
// Throws CompositeOrderError for composite m.
PackingResult decompose_prime(int m);

// Step circuits for every alpha coprime to m; every other alpha contributes
// its cycle system to the residual. Covers the leading tournament exactly once.
PackingResult pack_leading(int m);

}  // namespace hamdecomp
