// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Usage: acceptance [path-to-fairdisk-cli]

#include "fairdisk/assignment.hpp"
#include "fairdisk/candidates.hpp"
#include "fairdisk/fair_solver.hpp"
#include "fairdisk/flow.hpp"
#include "fairdisk/io.hpp"
#include "fairdisk/oracle.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace fairdisk;
using testsup::Rng;

std::string g_cli_path;

// Feasible instances solved by the oracle during criterion 1, reused by the
// realizability check of criterion 5.
std::vector<std::pair<Instance, double>> g_oracle_solved;

bool near_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// 1. solve() against the exhaustive oracle: verdicts exact, radii to 1e-6.
bool oracle_equivalence() {
  Rng rng(20240601);
  int mismatches = 0;
  int feasible = 0, infeasible = 0;

  auto compare = [&](const Instance& inst) {
    const auto got = fair::solve(inst);
    const auto ref = oracle::oracle_solve(inst);
    if (got.has_value() != ref.has_value()) {
      ++mismatches;
      return;
    }
    if (got) {
      ++feasible;
      g_oracle_solved.emplace_back(inst, ref->radius);
      if (!near_rel(got->radius, ref->radius, 1e-6)) ++mismatches;
      if (!fair::validate(inst, *got).empty()) ++mismatches;
    } else {
      ++infeasible;
    }
  };

  for (int i = 0; i < 200; ++i) {
    compare(testsup::random_instance(rng, rng.uniform_int(4, 8), rng.uniform_int(1, 3),
                                     rng.uniform_int(1, 2)));
  }
  for (int i = 0; i < 30; ++i) {
    compare(testsup::random_instance(rng, rng.uniform_int(4, 7), rng.uniform_int(1, 3), 3));
  }

  std::printf("        230 instances, %d feasible, %d infeasible, %d mismatches\n",
              feasible, infeasible, mismatches);
  return mismatches == 0 && feasible > 0 && infeasible > 0;
}

// 2. Occupancy-bounded k-center against its oracle on single-color inputs.
bool lu_equivalence() {
  Rng rng(20240602);
  int mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = rng.uniform_int(4, 8);
    const int k = rng.uniform_int(1, i < 80 ? 2 : 3);
    const auto pts = testsup::random_points(rng, static_cast<std::size_t>(n));
    std::int64_t lower, upper;
    if (rng.uniform(0.0, 1.0) < 0.7) {
      lower = rng.uniform_int(0, n / k);
      upper = rng.uniform_int((n + k - 1) / k, n);
    } else {
      const int a = rng.uniform_int(0, n + 2), b = rng.uniform_int(0, n + 2);
      lower = std::min(a, b);
      upper = std::max(a, b);
    }
    const auto got = assignment::solve_lu_kcenter(pts, k, lower, upper);
    const auto ref = oracle::oracle_lu(pts, k, lower, upper);
    if (got.has_value() != ref.has_value()) {
      ++mismatches;
    } else if (got && !near_rel(got->radius, ref->radius, 1e-6)) {
      ++mismatches;
    }
  }
  std::printf("        100 instances, %d mismatches\n", mismatches);
  return mismatches == 0;
}

// 3. Bounded max-flow against exhaustive integral-flow enumeration.
bool flow_correctness() {
  Rng rng(20240603);
  int mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    const auto net = testsup::random_network(rng, true);
    const auto ref = testsup::enumerate_all_flows(net);
    const auto res = flow::max_flow_with_lower_bounds(net);
    if (res.feasible != ref.feasible) {
      ++mismatches;
    } else if (res.feasible &&
               (res.value != ref.max_value || !flow::audit_flow(net, res).empty())) {
      ++mismatches;
    }
  }
  std::printf("        100 networks, %d mismatches\n", mismatches);
  return mismatches == 0;
}

// 4. Enumeration sizes never exceed the counting bounds.
bool counting_bounds() {
  Rng rng(20240604);
  int violations = 0;
  for (int i = 0; i < 50; ++i) {
    const auto pts = testsup::random_points(rng, rng.uniform_int(2, 12));
    const std::uint64_t n = pts.size();
    const auto radii = candidates::candidate_radii(pts);
    if (radii.size() > choose(n, 3) + choose(n, 2)) ++violations;
    for (double r : radii) {
      if (candidates::candidate_centers(pts, r).size() > 2 * choose(n, 2) + n) {
        ++violations;
      }
    }
  }
  std::printf("        50 point sets, %d bound violations\n", violations);
  return violations == 0;
}

// 5. Every oracle optimum is realizable as a candidate radius.
bool radius_realizability() {
  int missing = 0;
  for (const auto& [inst, radius] : g_oracle_solved) {
    bool found = false;
    for (double r : candidates::candidate_radii(inst.points)) {
      if (near_rel(r, radius, 1e-9)) {
        found = true;
        break;
      }
    }
    if (!found) ++missing;
  }
  std::printf("        %zu oracle optima, %d missing from the candidate radii\n",
              g_oracle_solved.size(), missing);
  return !g_oracle_solved.empty() && missing == 0;
}

// 6. Full-scan and binary-scan solves select the same candidate radius.
bool scan_agreement() {
  Rng rng(20240606);
  int mismatches = 0;
  for (int i = 0; i < 50; ++i) {
    const Instance inst = testsup::random_instance(rng, rng.uniform_int(4, 7),
                                                   rng.uniform_int(1, 3),
                                                   rng.uniform_int(1, 2));
    const auto full = fair::solve(inst, {candidates::ScanMode::full, false});
    const auto binary = fair::solve(inst, {candidates::ScanMode::binary, false});
    if (full.has_value() != binary.has_value()) {
      ++mismatches;
    } else if (full && full->radius != binary->radius) {
      ++mismatches;
    }
  }
  std::printf("        50 instances, %d scan-mode mismatches\n", mismatches);
  return mismatches == 0;
}

// 7. Random sampling never beats the optimum; exhausting the candidate
//    space reproduces it exactly.
bool heuristic_dominance() {
  Rng rng(20240607);
  int violations = 0;
  int exact_matches = 0;
  for (int i = 0; i < 50; ++i) {
    const Instance inst = testsup::random_instance(rng, rng.uniform_int(4, 7),
                                                   rng.uniform_int(1, 2), 2, 1.0);
    const auto exact = fair::solve(inst);
    if (!exact) {
      ++violations;  // bias 1.0 keeps the counting condition satisfiable
      continue;
    }
    const auto sampled = fair::solve_heuristic_random(inst, 32, 900 + i);
    if (sampled && sampled->radius < exact->radius - 1e-12) ++violations;

    const auto exhaustive = fair::solve_heuristic_random(
        inst, std::numeric_limits<std::uint64_t>::max(), 900 + i);
    if (!exhaustive || exhaustive->radius != exact->radius) {
      ++violations;
    } else {
      ++exact_matches;
    }
  }
  std::printf("        50 instances, %d violations, %d exhaustive matches\n", violations,
              exact_matches);
  return violations == 0 && exact_matches == 50;
}

// 8. CLI round trip: solve -> validate -> plot, plus document round-trips.
bool cli_end_to_end() {
  if (g_cli_path.empty()) {
    std::printf("        no CLI path given\n");
    return false;
  }
  const char* instance_text = R"({
  "k": 2,
  "colors": [
    {"name": "red", "lower": 1, "upper": 1},
    {"name": "blue", "lower": 1, "upper": 1}
  ],
  "points": [
    {"x": 0, "y": 0, "color": "red"},
    {"x": 1, "y": 0, "color": "blue"},
    {"x": 10, "y": 0, "color": "red"},
    {"x": 11, "y": 0, "color": "blue"}
  ]
})";

  auto shell = [](const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };

  bool ok = true;
  {
    std::ofstream out("acc_instance.json", std::ios::binary);
    out << instance_text;
  }
  ok = ok && shell(g_cli_path + " solve acc_instance.json --out acc_result.json") == 0;
  if (ok) {
    const auto doc = io::parse_result(slurp("acc_result.json"));
    const auto ni = io::parse_instance(instance_text);
    ok = ok && doc.status == io::Status::optimal;
    ok = ok && fair::validate(ni.instance, doc.clustering).empty();
    // parse -> emit -> parse fixed point for the instance document
    const auto again = io::parse_instance(io::emit_instance(ni));
    ok = ok && again.instance.colors == ni.instance.colors;
    ok = ok && again.instance.k == ni.instance.k;
    for (std::size_t i = 0; ok && i < ni.instance.size(); ++i) {
      ok = again.instance.points[i].x == ni.instance.points[i].x &&
           again.instance.points[i].y == ni.instance.points[i].y;
    }
  }
  ok = ok &&
       shell(g_cli_path + " validate acc_instance.json acc_result.json >/dev/null") == 0;
  ok = ok &&
       shell(g_cli_path + " plot acc_instance.json acc_result.json --out acc_plot.svg") == 0;
  if (ok) {
    const std::string svg = slurp("acc_plot.svg");
    auto count = [&](const std::string& needle) {
      std::size_t n = 0;
      for (std::size_t pos = svg.find(needle); pos != std::string::npos;
           pos = svg.find(needle, pos + 1)) {
        ++n;
      }
      return n;
    };
    ok = ok && count("class=\"disk\"") == 2 && count("class=\"dot\"") == 4;
  }

  // Infeasible instances exit with code 2.
  {
    std::ofstream out("acc_infeasible.json", std::ios::binary);
    out << R"({"k": 2, "colors": [{"name": "red", "lower": 2, "upper": 2}],
               "points": [{"x": 0, "y": 0, "color": "red"},
                          {"x": 1, "y": 0, "color": "red"},
                          {"x": 2, "y": 0, "color": "red"}]})";
  }
  ok = ok &&
       shell(g_cli_path + " solve acc_infeasible.json --out acc_inf.json 2>/dev/null") == 2;

  for (const char* f : {"acc_instance.json", "acc_result.json", "acc_plot.svg",
                        "acc_infeasible.json", "acc_inf.json"}) {
    std::remove(f);
  }
  std::printf("        solve/validate/plot round trip %s\n", ok ? "complete" : "failed");
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  struct Criterion {
    const char* name;
    bool (*run)();
  };
  const Criterion criteria[] = {
      {"oracle equivalence (exact fair clustering)", oracle_equivalence},
      {"occupancy-bounded k-center equivalence", lu_equivalence},
      {"bounded max-flow vs exhaustive enumeration", flow_correctness},
      {"candidate counting bounds", counting_bounds},
      {"optimal radius realizability", radius_realizability},
      {"scan-mode agreement", scan_agreement},
      {"heuristic dominance and exhaustive equality", heuristic_dominance},
      {"CLI end-to-end round trip", cli_end_to_end},
  };

  bool all_pass = true;
  int id = 1;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool pass = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %d. %s (%.2fs)\n", pass ? "PASS" : "FAIL", id++, c.name, secs);
    all_pass = all_pass && pass;
  }
  std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                               : "acceptance: FAILURES present");
  return all_pass ? 0 : 1;
}
