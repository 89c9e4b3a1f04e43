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

#include "hamdecomp/io_formats.hpp"

#include <array>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamdecomp/error.hpp"

namespace hamdecomp {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 10> kPalette = {
    "brown", "green", "orange", "red", "purple",
    "cyan4", "magenta", "gold3", "darkslategray", "deeppink"};

std::string labels_json(const std::vector<VertexId>& vertices) {
  json arr = json::array();
  for (VertexId v : vertices) arr.push_back(v.label);
  return arr.dump();
}

std::string packing_body(const PackingResult& p, const std::string& indent) {
  std::ostringstream out;
  out << "{\n" << indent << "  \"order\": " << p.order << ",\n";
  out << indent << "  \"circuits\": [";
  for (std::size_t k = 0; k < p.circuits.size(); ++k) {
    out << (k == 0 ? "\n" : ",\n") << indent << "    " << labels_json(p.circuits[k].vertices());
  }
  out << (p.circuits.empty() ? "" : "\n" + indent + "  ") << "],\n";
  out << indent << "  \"residual\": [";
  for (std::size_t s = 0; s < p.residual.size(); ++s) {
    const CycleSystem& system = p.residual[s];
    out << (s == 0 ? "\n" : ",\n") << indent << "    {\"step\": " << system.step.alpha
        << ", \"cycles\": [";
    for (std::size_t k = 0; k < system.cycles.size(); ++k) {
      out << (k == 0 ? "" : ", ") << labels_json(system.cycles[k]);
    }
    out << "]}";
  }
  out << (p.residual.empty() ? "" : "\n" + indent + "  ") << "]\n" << indent << "}";
  return out.str();
}

void require_keys(const json& obj, std::initializer_list<std::string_view> keys,
                  const std::string& path) {
  if (!obj.is_object()) throw SchemaError("expected an object", path);
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto k : keys) known = known || k == key;
    if (!known) throw SchemaError("unknown field \"" + key + "\"", path + "/" + key);
  }
  for (auto k : keys) {
    if (!obj.contains(std::string(k))) {
      throw SchemaError("missing field \"" + std::string(k) + "\"", path);
    }
  }
}

int read_int(const json& value, const std::string& path) {
  if (!value.is_number_integer()) throw SchemaError("expected an integer", path);
  const auto v = value.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw SchemaError("integer out of range", path);
  }
  return static_cast<int>(v);
}

std::vector<VertexId> read_labels(const json& value, int order, const std::string& path) {
  if (!value.is_array()) throw SchemaError("expected an array of vertex labels", path);
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string item = path + "/" + std::to_string(i);
    const int label = read_int(value[i], item);
    if (label < 1 || label > order) {
      throw SchemaError("vertex label " + std::to_string(label) + " outside 1.." + std::to_string(order), item);
    }
    out.push_back(VertexId{label});
  }
  return out;
}

PackingResult read_packing(const json& doc, const std::string& path) {
  require_keys(doc, {"order", "circuits", "residual"}, path);
  PackingResult p;
  p.order = read_int(doc["order"], path + "/order");
  if (p.order < 3 || p.order % 2 == 0) {
    throw SchemaError("order must be an odd integer >= 3", path + "/order");
  }

  const json& circuits = doc["circuits"];
  if (!circuits.is_array()) throw SchemaError("expected an array", path + "/circuits");
  for (std::size_t k = 0; k < circuits.size(); ++k) {
    const std::string item = path + "/circuits/" + std::to_string(k);
    auto vertices = read_labels(circuits[k], p.order, item);
    try {
      p.circuits.emplace_back(p.order, std::move(vertices));
    } catch (const Error& e) {
      throw SchemaError(e.what(), item);
    }
  }

  const json& residual = doc["residual"];
  if (!residual.is_array()) throw SchemaError("expected an array", path + "/residual");
  for (std::size_t s = 0; s < residual.size(); ++s) {
    const std::string item = path + "/residual/" + std::to_string(s);
    require_keys(residual[s], {"step", "cycles"}, item);
    CycleSystem system;
    try {
      system.step = StepValue::make(p.order, read_int(residual[s]["step"], item + "/step"));
    } catch (const SchemaError&) {
      throw;
    } catch (const Error& e) {
      throw SchemaError(e.what(), item + "/step");
    }
    const json& cycles = residual[s]["cycles"];
    if (!cycles.is_array()) throw SchemaError("expected an array", item + "/cycles");
    for (std::size_t k = 0; k < cycles.size(); ++k) {
      const std::string cpath = item + "/cycles/" + std::to_string(k);
      Cycle cycle = read_labels(cycles[k], p.order, cpath);
      if (cycle.size() < 2) throw SchemaError("cycle needs at least two vertices", cpath);
      std::vector<bool> seen(static_cast<std::size_t>(p.order) + 1, false);
      for (VertexId v : cycle) {
        if (seen[static_cast<std::size_t>(v.label)]) {
          throw SchemaError("cycle repeats vertex " + std::to_string(v.label), cpath);
        }
        seen[static_cast<std::size_t>(v.label)] = true;
      }
      system.cycles.push_back(canonical_cycle(std::move(cycle)));
    }
    p.residual.push_back(std::move(system));
  }
  return p;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what(), "");
  }
}

std::string dot_edge_color(const Tournament& t, const DirectedEdge& e, const ExportStyle& style,
                           const std::vector<std::string_view>& owner_color) {
  switch (style.coloring) {
    case Coloring::kNone:
      return {};
    case Coloring::kByEdgeType: {
      const int type = edge_type(t, e).distance;
      return std::string(kPalette[static_cast<std::size_t>(type - 1) % kPalette.size()]);
    }
    case Coloring::kByCircuit: {
      const std::size_t slot = static_cast<std::size_t>(e.from.label - 1) *
                                   static_cast<std::size_t>(t.order()) +
                               static_cast<std::size_t>(e.to.label - 1);
      return std::string(owner_color[slot]);
    }
  }
  return {};
}

}  // namespace

std::optional<ExportFormat> parse_export_format(std::string_view text) {
  if (text == "matrix") return ExportFormat::kMatrix;
  if (text == "dot") return ExportFormat::kDot;
  if (text == "json") return ExportFormat::kJson;
  return std::nullopt;
}

std::optional<Coloring> parse_coloring(std::string_view text) {
  if (text == "by-circuit") return Coloring::kByCircuit;
  if (text == "by-edge-type") return Coloring::kByEdgeType;
  if (text == "none") return Coloring::kNone;
  return std::nullopt;
}

std::span<const std::string_view> circuit_palette() { return kPalette; }

std::string export_matrix(const Tournament& t) {
  std::string out;
  const int m = t.order();
  out.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(2 * m));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (j > 1) out += ' ';
      out += t.has_edge(VertexId{i}, VertexId{j}) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

Tournament parse_matrix(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::vector<int> row;
    std::string token;
    int column = 0;
    while (tokens >> token) {
      ++column;
      if (token != "0" && token != "1") {
        throw MalformedInputError("row " + std::to_string(line_no) + ", column " +
                                      std::to_string(column) + ": expected 0 or 1, got \"" +
                                      token + "\"",
                                  line_no, column);
      }
      row.push_back(token == "1" ? 1 : 0);
    }
    rows.push_back(std::move(row));
  }
  // Blank lines are only allowed after the last row.
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) {
      throw MalformedInputError("row " + std::to_string(i + 1) + " is blank", static_cast<int>(i) + 1, 0);
    }
  }

  const int m = static_cast<int>(rows.size());
  if (m == 0) throw MalformedInputError("empty matrix", 0, 0);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m) {
      throw MalformedInputError("row " + std::to_string(i + 1) + " has " +
                                    std::to_string(rows[static_cast<std::size_t>(i)].size()) +
                                    " entries, expected " + std::to_string(m) + " (matrix must be square)",
                                i + 1, 0);
    }
  }
  if (m < 3 || m % 2 == 0) {
    throw MalformedInputError("order " + std::to_string(m) + " is not an odd integer >= 3", 0, 0);
  }

  auto at = [&](int i, int j) { return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; };
  EdgeSet edges(m);
  for (int i = 1; i <= m; ++i) {
    if (at(i, i) != 0) {
      throw MalformedInputError("loop at row " + std::to_string(i) + ", column " + std::to_string(i), i, i);
    }
    for (int j = i + 1; j <= m; ++j) {
      const int sum = at(i, j) + at(j, i);
      if (sum != 1) {
        throw MalformedInputError("pair (" + std::to_string(i) + "," + std::to_string(j) + ") " +
                                      (sum == 2 ? "is oriented both ways" : "has no edge"),
                                  i, j);
      }
      edges.insert(at(i, j) ? DirectedEdge{VertexId{i}, VertexId{j}} : DirectedEdge{VertexId{j}, VertexId{i}});
    }
  }
  return Tournament::from_edges(std::move(edges));
}

std::string export_dot(const Tournament& t, const std::optional<PackingResult>& packing,
                       const ExportStyle& style) {
  if (style.format != ExportFormat::kDot) throw StyleError("export_dot requires the dot format");
  const int m = t.order();

  std::vector<std::string_view> owner_color;
  if (style.coloring == Coloring::kByCircuit) {
    if (!packing) throw StyleError("by-circuit colouring needs a packing");
    if (packing->order != m) throw StyleError("packing order does not match the tournament");
    owner_color.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), {});
    std::size_t covered = 0;
    auto paint = [&](const DirectedEdge& e, std::string_view color) {
      if (!t.has_edge(e)) {
        throw StyleError("packing edge " + std::to_string(e.from.label) + "->" +
                         std::to_string(e.to.label) + " is not in the tournament");
      }
      auto& slot = owner_color[static_cast<std::size_t>(e.from.label - 1) * static_cast<std::size_t>(m) +
                               static_cast<std::size_t>(e.to.label - 1)];
      if (!slot.empty()) {
        throw StyleError("packing uses edge " + std::to_string(e.from.label) + "->" +
                         std::to_string(e.to.label) + " twice");
      }
      slot = color;
      ++covered;
    };
    for (std::size_t k = 0; k < packing->circuits.size(); ++k) {
      for (const DirectedEdge& e : packing->circuits[k].edges()) paint(e, kPalette[k % kPalette.size()]);
    }
    for (const CycleSystem& system : packing->residual) {
      for (const Cycle& cycle : system.cycles) {
        for (const DirectedEdge& e : cycle_edges(cycle)) paint(e, kResidualColor);
      }
    }
    if (covered != t.edge_count()) throw StyleError("packing does not cover every tournament edge");
  } else if (style.coloring == Coloring::kByEdgeType) {
    for (const DirectedEdge& e : t.edges().edges()) {
      try {
        edge_type(t, e);
      } catch (const EdgeError& err) {
        throw StyleError(std::string("by-edge-type colouring needs a leading tournament: ") + err.what());
      }
    }
  }

  std::ostringstream out;
  out << "digraph tournament {\n";
  out << "  node [shape=circle];\n";
  for (int v = 1; v <= m; ++v) out << "  v" << v << ";\n";
  for (const DirectedEdge& e : t.edges().edges()) {
    out << "  v" << e.from.label << " -> v" << e.to.label;
    const std::string color = dot_edge_color(t, e, style, owner_color);
    if (!color.empty()) out << " [color=\"" << color << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const PackingResult& p) { return packing_body(p, "") + "\n"; }

PackingResult parse_json(std::string_view text) { return read_packing(parse_document(text), ""); }

std::string export_tournament_json(const Tournament& t) {
  std::ostringstream out;
  out << "{\n  \"order\": " << t.order() << ",\n  \"adjacency\": [";
  for (int i = 1; i <= t.order(); ++i) {
    json row = json::array();
    for (int j = 1; j <= t.order(); ++j) row.push_back(t.has_edge(VertexId{i}, VertexId{j}) ? 1 : 0);
    out << (i == 1 ? "\n" : ",\n") << "    " << row.dump();
  }
  out << "\n  ]\n}\n";
  return out.str();
}

std::string export_outcome_json(const SearchOutcome& outcome) {
  std::ostringstream out;
  out << "{\n  \"status\": " << json(std::string(to_string(outcome.status))).dump() << ",\n";
  out << "  \"nodes_explored\": " << outcome.nodes_explored << ",\n";
  out << "  \"decomposition\": ";
  if (outcome.decomposition) {
    out << packing_body(*outcome.decomposition, "  ");
  } else {
    out << "null";
  }
  out << "\n}\n";
  return out.str();
}

SearchOutcome parse_outcome_json(std::string_view text) {
  const json doc = parse_document(text);
  require_keys(doc, {"status", "nodes_explored", "decomposition"}, "");
  SearchOutcome outcome;
  if (!doc["status"].is_string()) throw SchemaError("expected a string", "/status");
  const auto status = parse_search_status(doc["status"].get<std::string>());
  if (!status) throw SchemaError("unknown status", "/status");
  outcome.status = *status;
  if (!doc["nodes_explored"].is_number_unsigned()) {
    throw SchemaError("expected a non-negative integer", "/nodes_explored");
  }
  outcome.nodes_explored = doc["nodes_explored"].get<std::uint64_t>();
  const json& decomposition = doc["decomposition"];
  if (outcome.status == SearchStatus::kDecomposed) {
    outcome.decomposition = read_packing(decomposition, "/decomposition");
  } else if (!decomposition.is_null()) {
    throw SchemaError("decomposition must be null unless the status is decomposed", "/decomposition");
  }
  return outcome;
}

}  // namespace hamdecomp
