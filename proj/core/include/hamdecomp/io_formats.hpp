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

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "hamdecomp/oracle.hpp"
#include "hamdecomp/packing.hpp"
#include "hamdecomp/tournament.hpp"

namespace hamdecomp {

enum class ExportFormat { kMatrix, kDot, kJson };
enum class Coloring { kByCircuit, kByEdgeType, kNone };

struct ExportStyle {
  ExportFormat format = ExportFormat::kMatrix;
  // Only meaningful for kDot.
  Coloring coloring = Coloring::kNone;
};

std::optional<ExportFormat> parse_export_format(std::string_view text);
std::optional<Coloring> parse_coloring(std::string_view text);

// DOT colours. Circuit k (0-based) uses circuit_palette()[k % size]; edge
// type t uses circuit_palette()[(t - 1) % size]; residual edges always use
// kResidualColor, which is not in the palette.
std::span<const std::string_view> circuit_palette();
inline constexpr std::string_view kResidualColor = "blue";

// m lines of m space-separated 0/1 digits, newline-terminated.
std::string export_matrix(const Tournament& t);

// Inverse of export_matrix. Throws MalformedInputError naming the 1-based row
// and column of the first problem (non-square, non-binary, loop, pair
// oriented both ways or neither way, even order).
Tournament parse_matrix(std::string_view text);

// DOT digraph with vertices v1..vm and edges sorted by (from, to).
// kByCircuit needs a packing that covers t exactly; kByEdgeType needs a
// leading tournament. Throws StyleError otherwise, or when style.format is
// not kDot.
std::string export_dot(const Tournament& t, const std::optional<PackingResult>& packing,
                       const ExportStyle& style);

// {"order", "circuits", "residual": [{"step", "cycles"}]} with fixed field
// order and layout.
std::string export_json(const PackingResult& p);
// Throws SchemaError with a JSON-pointer path.
PackingResult parse_json(std::string_view text);

// {"order", "adjacency"}.
std::string export_tournament_json(const Tournament& t);

// {"status", "nodes_explored", "decomposition"}; decomposition is null unless
// the status is "decomposed".
std::string export_outcome_json(const SearchOutcome& outcome);
SearchOutcome parse_outcome_json(std::string_view text);

}  // namespace hamdecomp
