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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hamdecomp/hamdecomp.hpp"

namespace hamdecomp::cli {

namespace {

// Raised for bad flag combinations; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> order;
  std::string format;
  std::string color;
  std::string input;
  std::string output;
  std::string packing;
  std::string emit = "both";
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_seconds;
  unsigned jobs = 1;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open input file \"" + path + "\"");
  buffer << file.rdbuf();
  return buffer.str();
}

int require_order(const Options& opt, const std::string& command) {
  if (!opt.order) throw UsageError(command + " requires --order <m>");
  return *opt.order;
}

// --input wins over --order; --order builds the leading tournament.
Tournament load_tournament(const Options& opt, std::istream& in, const std::string& command) {
  if (!opt.input.empty()) return parse_matrix(read_source(opt.input, in));
  if (opt.order) return build_leading_tournament(*opt.order);
  throw UsageError(command + " requires --input <path|-> or --order <m>");
}

ExportStyle style_for(const Options& opt, ExportFormat fallback_format, Coloring fallback_color) {
  ExportStyle style{fallback_format, fallback_color};
  if (!opt.format.empty()) style.format = *parse_export_format(opt.format);
  if (!opt.color.empty()) {
    style.coloring = *parse_coloring(opt.color);
    if (style.format != ExportFormat::kDot && style.coloring != Coloring::kNone) {
      throw UsageError("--color only applies to --format dot");
    }
  }
  return style;
}

std::string join_labels(const std::vector<VertexId>& vertices) {
  std::string out;
  for (VertexId v : vertices) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v.label);
  }
  return out;
}

std::string packing_report(const PackingResult& p) {
  std::ostringstream out;
  const int n = (p.order - 1) / 2;
  out << "order " << p.order << ": " << p.circuits.size() << " of " << n << " Hamilton circuits";
  out << (p.residual.empty() ? ", residual empty\n" : ", residual " + std::to_string(p.residual.size()) + " cycle system(s)\n");
  for (std::size_t k = 0; k < p.circuits.size(); ++k) {
    out << "circuit " << (k + 1) << ": " << join_labels(p.circuits[k].vertices()) << '\n';
  }
  for (const CycleSystem& system : p.residual) {
    out << "residual step " << system.step.alpha << ':';
    for (const Cycle& cycle : system.cycles) out << " (" << join_labels(cycle) << ')';
    out << '\n';
  }
  return out.str();
}

// Packing output: text report unless --format is given.
std::string render_packing(const Tournament& t, const PackingResult& p, const Options& opt) {
  if (opt.format.empty()) {
    if (!opt.color.empty()) throw UsageError("--color only applies to --format dot");
    return packing_report(p);
  }
  const ExportStyle style = style_for(opt, ExportFormat::kMatrix, Coloring::kByCircuit);
  switch (style.format) {
    case ExportFormat::kMatrix:
      return export_matrix(t);
    case ExportFormat::kDot:
      return export_dot(t, p, style);
    case ExportFormat::kJson:
      return export_json(p);
  }
  return {};
}

std::string render_tournament(const Tournament& t, const Options& opt) {
  const ExportStyle style = style_for(opt, ExportFormat::kMatrix, Coloring::kNone);
  switch (style.format) {
    case ExportFormat::kMatrix:
      return export_matrix(t);
    case ExportFormat::kDot:
      if (style.coloring == Coloring::kByCircuit) {
        throw UsageError("--color by-circuit needs a decomposition; use decompose, pack or rotate");
      }
      return export_dot(t, std::nullopt, style);
    case ExportFormat::kJson:
      return export_tournament_json(t);
  }
  return {};
}

std::string indent_block(const std::string& text, const std::string& pad) {
  std::string out;
  std::istringstream lines(text);
  std::string line;
  bool first = true;
  while (std::getline(lines, line)) {
    if (!first) out += "\n" + pad;
    out += line;
    first = false;
  }
  return out;
}

struct CommandResult {
  std::string text;
  int status = kSuccess;
};

CommandResult cmd_build(const Options& opt) {
  return {render_tournament(build_leading_tournament(require_order(opt, "build")), opt)};
}

CommandResult cmd_decompose(const Options& opt) {
  const int m = require_order(opt, "decompose");
  const PackingResult p = decompose_prime(m);
  return {render_packing(build_leading_tournament(m), p, opt)};
}

CommandResult cmd_pack(const Options& opt) {
  const int m = require_order(opt, "pack");
  return {render_packing(build_leading_tournament(m), pack_leading(m), opt)};
}

CommandResult cmd_rotate(const Options& opt) {
  const int m = require_order(opt, "rotate");
  const Tournament t = rotation_tournament(m);
  const PackingResult p = rotation_decomposition(m);
  if (opt.emit == "tournament") return {render_tournament(t, opt)};
  if (opt.emit == "decomposition") return {render_packing(t, p, opt)};
  // both
  if (opt.format == "json") {
    return {"{\n  \"tournament\": " + indent_block(export_tournament_json(t), "  ") +
            ",\n  \"decomposition\": " + indent_block(export_json(p), "  ") + "\n}\n"};
  }
  if (opt.format == "dot") return {render_packing(t, p, opt)};
  Options matrix = opt;
  matrix.format = "matrix";
  Options report = opt;
  report.format.clear();
  return {render_tournament(t, matrix) + "\n" + render_packing(t, p, report)};
}

CommandResult cmd_search(const Options& opt, std::istream& in) {
  const Tournament t = load_tournament(opt, in, "search");
  SearchBudget budget;
  budget.max_nodes = opt.budget_nodes;
  if (opt.budget_seconds) {
    budget.time_limit = std::chrono::milliseconds(static_cast<long long>(*opt.budget_seconds * 1000.0));
  }
  if (t.order() > kExhaustiveOrderCeiling && budget.unlimited()) {
    throw UsageError("order " + std::to_string(t.order()) + " needs --budget-nodes or --budget-seconds");
  }
  const SearchOutcome outcome = find_decomposition(t, budget, SearchOptions{opt.jobs});

  CommandResult result;
  result.status = outcome.status == SearchStatus::kDecomposed  ? kSuccess
                  : outcome.status == SearchStatus::kExhausted ? kFailed
                                                               : kBudgetExceeded;
  if (opt.format == "json") {
    result.text = export_outcome_json(outcome);
  } else if (opt.format.empty()) {
    std::ostringstream out;
    out << "status: " << to_string(outcome.status) << '\n';
    out << "nodes explored: " << outcome.nodes_explored << '\n';
    if (outcome.decomposition) out << packing_report(*outcome.decomposition);
    result.text = out.str();
  } else if (outcome.decomposition) {
    result.text = render_packing(t, *outcome.decomposition, opt);
  } else {
    throw UsageError("--format " + opt.format + " needs a decomposition; search ended with status " +
                     std::string(to_string(outcome.status)));
  }
  return result;
}

CommandResult cmd_verify(const Options& opt, std::istream& in) {
  if (opt.packing.empty()) throw UsageError("verify requires --packing <path|->");
  if (opt.packing == "-" && opt.input == "-") throw UsageError("--input and --packing cannot both read stdin");
  const Tournament t = load_tournament(opt, in, "verify");
  const PackingResult p = parse_json(read_source(opt.packing, in));
  const VerificationReport report = verify_decomposition(t, p);
  std::ostringstream out;
  out << (report.ok ? "PASS" : "FAIL") << '\n';
  for (const auto& line : report.diagnostics) out << "  " << line << '\n';
  return {out.str(), report.ok ? kSuccess : kFailed};
}

CommandResult cmd_classify(const Options& opt, std::istream& in) {
  const Tournament t = load_tournament(opt, in, "classify");
  std::map<int, int> counts;
  std::ostringstream table;
  std::vector<std::pair<DirectedEdge, int>> rows;
  for (const DirectedEdge& e : t.edges().edges()) {
    const int type = edge_type(t, e).distance;
    rows.emplace_back(e, type);
    ++counts[type];
  }
  if (opt.format == "json") {
    std::ostringstream out;
    out << "{\n  \"order\": " << t.order() << ",\n  \"edges\": [";
    for (std::size_t k = 0; k < rows.size(); ++k) {
      out << (k == 0 ? "\n" : ",\n") << "    {\"from\": " << rows[k].first.from.label
          << ", \"to\": " << rows[k].first.to.label << ", \"type\": " << rows[k].second << '}';
    }
    out << "\n  ],\n  \"counts\": [";
    bool first = true;
    for (const auto& [type, count] : counts) {
      out << (first ? "\n" : ",\n") << "    {\"type\": " << type << ", \"edges\": " << count << '}';
      first = false;
    }
    out << "\n  ]\n}\n";
    return {out.str()};
  }
  if (!opt.format.empty()) throw UsageError("classify supports the default table or --format json");
  table << "from\tto\ttype\n";
  for (const auto& [e, type] : rows) table << e.from.label << '\t' << e.to.label << '\t' << type << '\n';
  table << "\ntype\tedges\n";
  for (const auto& [type, count] : counts) table << type << '\t' << count << '\n';
  return {table.str()};
}

void add_shared_flags(CLI::App* sub, Options& opt) {
  sub->add_option("--order", opt.order, "Tournament order m (odd, >= 3)");
  sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"matrix", "dot", "json"}));
  sub->add_option("--color", opt.color, "DOT edge colouring")
      ->check(CLI::IsMember({"by-circuit", "by-edge-type", "none"}));
  sub->add_option("--output", opt.output, "Output path (default: stdout)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamilton decompositions of diregular tournaments", "hamdecomp"};
  app.require_subcommand(1);
  Options opt;

  auto* build = app.add_subcommand("build", "Leading diregular tournament");
  auto* decompose = app.add_subcommand("decompose", "Step-circuit decomposition for prime order");
  auto* pack = app.add_subcommand("pack", "Step circuits plus residual cycle systems for any order");
  auto* rotate = app.add_subcommand("rotate", "Rotation-generated tournament and its decomposition");
  auto* search = app.add_subcommand("search", "Exhaustive search for a Hamilton decomposition");
  auto* verify = app.add_subcommand("verify", "Check a packing against a tournament");
  auto* classify = app.add_subcommand("classify", "Edge distance types of a leading tournament");

  for (auto* sub : {build, decompose, pack, rotate, search, verify, classify}) add_shared_flags(sub, opt);
  for (auto* sub : {search, verify, classify}) {
    sub->add_option("--input", opt.input, "Adjacency matrix file, or - for stdin");
  }
  rotate->add_option("--emit", opt.emit, "What to print")
      ->check(CLI::IsMember({"tournament", "decomposition", "both"}));
  search->add_option("--budget-nodes", opt.budget_nodes, "Node budget")->check(CLI::PositiveNumber);
  search->add_option("--budget-seconds", opt.budget_seconds, "Time budget in seconds")->check(CLI::PositiveNumber);
  search->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--packing", opt.packing, "Packing JSON file, or - for stdin");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  CommandResult result;
  try {
    if (build->parsed()) result = cmd_build(opt);
    else if (decompose->parsed()) result = cmd_decompose(opt);
    else if (pack->parsed()) result = cmd_pack(opt);
    else if (rotate->parsed()) result = cmd_rotate(opt);
    else if (search->parsed()) result = cmd_search(opt, in);
    else if (verify->parsed()) result = cmd_verify(opt, in);
    else if (classify->parsed()) result = cmd_classify(opt, in);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (opt.output.empty() || opt.output == "-") {
    out << result.text;
  } else {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file \"" << opt.output << "\"\n";
      return kUsage;
    }
    file << result.text;
  }
  return result.status;
}

}  // namespace hamdecomp::cli
