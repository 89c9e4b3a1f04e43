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

// Exit-gate suite: one PASS/FAIL line per acceptance criterion, with the
// runtime limit for that criterion enforced alongside the exact checks.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hamdecomp/hamdecomp.hpp"
#include "support/oracles.hpp"

namespace {

using namespace hamdecomp;

struct Failure {
  std::string message;
};

void expect(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(HAMDECOMP_GOLDEN_DIR) + "/" + name, std::ios::binary);
  expect(static_cast<bool>(in), "missing golden file " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<int>> circuit_labels(const PackingResult& p) {
  std::vector<std::vector<int>> out;
  for (const auto& c : p.circuits) out.push_back(c.labels());
  return out;
}

std::vector<std::vector<int>> cycle_labels(const std::vector<Cycle>& cycles) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cycles) {
    std::vector<int> labels;
    for (VertexId v : c) labels.push_back(v.label);
    out.push_back(labels);
  }
  return out;
}

std::vector<std::vector<int>> all_cycles(const PackingResult& p) {
  auto out = circuit_labels(p);
  for (const auto& system : p.residual) {
    const auto cycles = cycle_labels(system.cycles);
    out.insert(out.end(), cycles.begin(), cycles.end());
  }
  return out;
}

// Each vertex has exactly `per_vertex` in- and out-edges over the packing.
bool balanced(const PackingResult& p, int per_vertex) {
  std::vector<int> in(static_cast<std::size_t>(p.order) + 1, 0), out(in);
  for (const auto& e : p.all_edges()) {
    ++out[static_cast<std::size_t>(e.from.label)];
    ++in[static_cast<std::size_t>(e.to.label)];
  }
  for (int v = 1; v <= p.order; ++v) {
    if (in[static_cast<std::size_t>(v)] != per_vertex || out[static_cast<std::size_t>(v)] != per_vertex) return false;
  }
  return true;
}

void ac1_golden_seven() {
  const CliRun json = run_cli({"decompose", "--order", "7", "--format", "json"});
  expect(json.code == 0, "decompose --order 7 exited " + std::to_string(json.code));
  const PackingResult p = parse_json(json.out);
  expect(circuit_labels(p) == std::vector<std::vector<int>>{{1, 2, 3, 4, 5, 6, 7}, {1, 3, 5, 7, 2, 4, 6}, {1, 4, 7, 3, 6, 2, 5}},
         "circuits differ from the worked 7-point example");
  expect(p.residual.empty(), "residual not empty");
  const CliRun text = run_cli({"decompose", "--order", "7"});
  expect(text.out == "order 7: 3 of 3 Hamilton circuits, residual empty\n"
                     "circuit 1: 1 2 3 4 5 6 7\ncircuit 2: 1 3 5 7 2 4 6\ncircuit 3: 1 4 7 3 6 2 5\n",
         "text report differs");
  expect(verify_decomposition(build_leading_tournament(7), p).ok, "verify_decomposition failed");
}

void ac2_matrix_nine() {
  const int printed[9][9] = {
      {0, 1, 1, 1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1, 1, 0, 0},
      {0, 0, 0, 0, 1, 1, 1, 1, 0}, {0, 0, 0, 0, 0, 1, 1, 1, 1}, {1, 0, 0, 0, 0, 0, 1, 1, 1},
      {1, 1, 0, 0, 0, 0, 0, 1, 1}, {1, 1, 1, 0, 0, 0, 0, 0, 1}, {1, 1, 1, 1, 0, 0, 0, 0, 0}};
  const Tournament t = build_leading_tournament(9);
  for (int i = 1; i <= 9; ++i) {
    for (int j = 1; j <= 9; ++j) {
      expect(t.has_edge(VertexId{i}, VertexId{j}) == (printed[i - 1][j - 1] == 1),
             "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs");
    }
  }
}

void ac3_pack_nine() {
  const CliRun r = run_cli({"pack", "--order", "9", "--format", "json"});
  expect(r.code == 0, "pack --order 9 exited " + std::to_string(r.code));
  const PackingResult p = parse_json(r.out);
  expect(circuit_labels(p) == std::vector<std::vector<int>>{{1, 2, 3, 4, 5, 6, 7, 8, 9},
                                                            {1, 3, 5, 7, 9, 2, 4, 6, 8},
                                                            {1, 5, 9, 4, 8, 3, 7, 2, 6}},
         "circuits differ from steps 1, 2, 4");
  expect(p.residual.size() == 1 && p.residual[0].step.alpha == 3, "expected one residual system for step 3");
  expect(cycle_labels(p.residual[0].cycles) == std::vector<std::vector<int>>{{1, 4, 7}, {2, 5, 8}, {3, 6, 9}},
         "residual triangles differ");
  expect(p.all_edges().size() == 36, "packing does not list 36 edges");
  expect(verify_decomposition(build_leading_tournament(9), p).ok, "coverage check failed");
  expect(testing::covers_exactly(all_cycles(p), testing::leading_edge_set(9)), "independent coverage check failed");
}

void ac4_prime_suite() {
  for (int m : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const std::string tag = "m=" + std::to_string(m) + ": ";
    const PackingResult p = decompose_prime(m);
    const int n = (m - 1) / 2;
    expect(static_cast<int>(p.circuits.size()) == n && p.residual.empty(), tag + "wrong circuit count");
    for (const auto& c : p.circuits) expect(c.order() == m, tag + "circuit is not Hamiltonian");
    expect(testing::covers_exactly(all_cycles(p), testing::leading_edge_set(m)), tag + "edges do not partition E(leading)");
    expect(balanced(p, n), tag + "vertex degrees are not (n, n)");
    expect(verify_decomposition(build_leading_tournament(m), p).ok, tag + "verify_decomposition failed");
  }
}

void ac5_gcd_suite() {
  for (int m = 3; m <= 31; m += 2) {
    for (int alpha = 1; alpha <= (m - 1) / 2; ++alpha) {
      const std::string tag = "m=" + std::to_string(m) + " alpha=" + std::to_string(alpha) + ": ";
      const CycleSystem s = step_cycles(m, alpha);
      const int g = testing::euclid_gcd(alpha, m);
      expect(static_cast<int>(s.cycles.size()) == g, tag + "cycle count != gcd");
      for (const auto& c : s.cycles) expect(static_cast<int>(c.size()) == m / g, tag + "cycle length != m/gcd");
      expect(cycle_labels(s.cycles) == testing::orbit_enumeration(m, alpha), tag + "orbits differ from enumeration");
    }
  }
}

void ac6_rotation_suite() {
  for (int m = 3; m <= 25; m += 2) {
    const std::string tag = "m=" + std::to_string(m) + ": ";
    const int n = (m - 1) / 2;
    const PackingResult p = rotation_decomposition(m);
    expect(static_cast<int>(p.circuits.size()) == n && p.residual.empty(), tag + "wrong circuit count");
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : p.all_edges()) {
      expect(pairs.insert({std::min(e.from.label, e.to.label), std::max(e.from.label, e.to.label)}).second,
             tag + "pair used twice");
    }
    expect(static_cast<int>(pairs.size()) == m * n, tag + "union is not complete");
    const Tournament t = rotation_tournament(m);
    expect(is_diregular(t), tag + "union not diregular");
    expect(balanced(p, n), tag + "vertex degrees are not (n, n)");
    expect(verify_decomposition(t, p).ok, tag + "verify_decomposition failed");
  }
  const auto first = rotation_decomposition(9).circuits.at(1).labels();
  expect(std::vector<int>(first.begin(), first.begin() + 4) == std::vector<int>{1, 3, 5, 2},
         "first rotated 9-point circuit does not begin 1,3,5,2");
}

void ac7_oracle() {
  for (int m : {3, 5, 7}) {
    const std::string tag = "m=" + std::to_string(m) + ": ";
    const Tournament t = build_leading_tournament(m);
    const SearchOutcome base = find_decomposition(t, {});
    expect(base.status == SearchStatus::kDecomposed, tag + "not decomposed");
    expect(verify_decomposition(t, *base.decomposition).ok, tag + "decomposition does not verify");
    const std::string reference = export_outcome_json(base);
    expect(export_outcome_json(find_decomposition(t, {})) == reference, tag + "repeat run differs");
    for (unsigned jobs : {2u, 4u, 8u}) {
      expect(export_outcome_json(find_decomposition(t, {}, SearchOptions{jobs})) == reference,
             tag + "jobs=" + std::to_string(jobs) + " differs");
    }
    const std::string order = std::to_string(m);
    const std::string cli1 = run_cli({"search", "--order", order, "--format", "json"}).out;
    const std::string cli4 = run_cli({"search", "--order", order, "--format", "json", "--jobs", "4"}).out;
    expect(cli1 == reference && cli4 == reference, tag + "CLI output differs across --jobs");
  }
}

void ac8_composite_settlement() {
  const std::string golden_text = read_golden("leading9_search.json");
  const SearchOutcome golden = parse_outcome_json(golden_text);
  expect(golden.status != SearchStatus::kBudgetExceeded, "golden records budget-exceeded");
  const Tournament t = build_leading_tournament(9);
  if (golden.status == SearchStatus::kDecomposed) {
    expect(golden.decomposition && verify_decomposition(t, *golden.decomposition).ok, "golden witness does not verify");
  }
  const SearchOutcome fresh = find_decomposition(t, {});
  expect(fresh.status != SearchStatus::kBudgetExceeded, "exhaustive run hit its budget");
  expect(export_outcome_json(fresh) == golden_text, "fresh run differs from the committed golden");
  std::cout << "       leading(9): " << to_string(fresh.status) << " after " << fresh.nodes_explored << " nodes\n";
}

void ac9_round_trips() {
  std::vector<Tournament> tournaments;
  std::vector<PackingResult> packings;
  tournaments.push_back(build_leading_tournament(7));
  tournaments.push_back(build_leading_tournament(9));
  packings.push_back(decompose_prime(7));
  packings.push_back(pack_leading(9));
  for (int m : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    tournaments.push_back(build_leading_tournament(m));
    packings.push_back(decompose_prime(m));
  }
  for (int m = 3; m <= 25; m += 2) {
    tournaments.push_back(rotation_tournament(m));
    packings.push_back(rotation_decomposition(m));
  }
  for (const auto& t : tournaments) {
    expect(parse_matrix(export_matrix(t)) == t, "matrix round-trip failed at m=" + std::to_string(t.order()));
  }
  for (const auto& p : packings) {
    const std::string text = export_json(p);
    const PackingResult back = parse_json(text);
    expect(back == p && export_json(back) == text, "JSON round-trip failed at m=" + std::to_string(p.order));
  }
  const ExportStyle dot{ExportFormat::kDot, Coloring::kByCircuit};
  const std::string first = export_dot(build_leading_tournament(9), pack_leading(9), dot);
  expect(first == export_dot(build_leading_tournament(9), pack_leading(9), dot), "DOT output not stable in-process");
  expect(first == read_golden("pack9_by_circuit.dot"), "DOT output differs from committed golden");
  const auto a = run_cli({"rotate", "--order", "15", "--format", "dot"}).out;
  expect(a == run_cli({"rotate", "--order", "15", "--format", "dot"}).out, "CLI DOT output not stable");
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "7-point decomposition reproduces the worked circuits", 1.0, ac1_golden_seven},
      {"AC2", "leading(9) equals the printed 9x9 matrix", 1.0, ac2_matrix_nine},
      {"AC3", "pack --order 9: steps 1,2,4 plus residual triangles", 1.0, ac3_pack_nine},
      {"AC4", "prime-order decompositions for m in {3..31}", 5.0, ac4_prime_suite},
      {"AC5", "step cycle structure matches gcd for odd m in 3..31", 5.0, ac5_gcd_suite},
      {"AC6", "rotation decompositions for odd m in 3..25", 5.0, ac6_rotation_suite},
      {"AC7", "oracle soundness and determinism for m in {3,5,7}", 30.0, ac7_oracle},
      {"AC8", "leading(9) settled by exhaustive search, golden re-verified", 600.0, ac8_composite_settlement},
      {"AC9", "matrix/JSON round-trips and byte-stable DOT", 5.0, ac9_round_trips},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const Failure& f) {
      error = f.message;
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && seconds >= c.limit_seconds) {
      std::ostringstream s;
      s << "runtime " << seconds << " s exceeds " << c.limit_seconds << " s";
      error = s.str();
    }
    std::cout << (error.empty() ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.title << " (" << std::fixed
              << std::setprecision(3) << seconds << " s)";
    if (!error.empty()) std::cout << ": " << error;
    std::cout << '\n';
    if (!error.empty()) ++failures;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << '/' << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
