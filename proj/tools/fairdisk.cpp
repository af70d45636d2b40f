// fairdisk command line tool: exact, heuristic and brute-force solvers for
// fair k-clustering instances, plus result validation and SVG plots.

#include "fairdisk/assignment.hpp"
#include "fairdisk/fair_solver.hpp"
#include "fairdisk/io.hpp"
#include "fairdisk/oracle.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << text;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct SolveArgs {
  std::string instance_path;
  std::string out_path;
  std::string scan = "binary";
  std::string parallel = "off";
};

struct HeuristicArgs {
  std::string instance_path;
  std::string out_path;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
};

struct OracleArgs {
  std::string instance_path;
  std::string out_path;
  std::uint64_t budget = 10'000'000;
};

struct FileArgs {
  std::string instance_path;
  std::string result_path;
  std::string out_path;
};

int emit_and_report(const fairdisk::io::ResultDocument& doc, const std::string& out_path) {
  write_output(fairdisk::io::emit_result(doc), out_path);
  return doc.status == fairdisk::io::Status::infeasible ? kExitInfeasible : kExitOk;
}

int run_solve(const SolveArgs& args) {
  const auto ni = fairdisk::io::parse_instance(read_file(args.instance_path));
  fairdisk::candidates::SearchOptions opts;
  opts.scan = args.scan == "full" ? fairdisk::candidates::ScanMode::full
                                  : fairdisk::candidates::ScanMode::binary;
  opts.parallel = args.parallel == "on";
  fairdisk::candidates::SearchStats stats;

  const auto t0 = std::chrono::steady_clock::now();
  const auto result = fairdisk::fair::solve(ni.instance, opts, &stats);

  fairdisk::io::ResultDocument doc;
  doc.status = result ? fairdisk::io::Status::optimal : fairdisk::io::Status::infeasible;
  if (result) doc.clustering = *result;
  doc.solver.mode = "exact/" + args.scan + (opts.parallel ? "/parallel" : "");
  doc.solver.elapsed_seconds = seconds_since(t0);
  doc.solver.radius_count = stats.radius_count;
  doc.solver.radii_probed = stats.radii_probed;
  doc.solver.subsets_checked = stats.subsets_checked;
  return emit_and_report(doc, args.out_path);
}

int run_heuristic(const HeuristicArgs& args) {
  const auto ni = fairdisk::io::parse_instance(read_file(args.instance_path));
  const auto t0 = std::chrono::steady_clock::now();
  const auto result =
      fairdisk::fair::solve_heuristic_random(ni.instance, args.samples, args.seed);

  fairdisk::io::ResultDocument doc;
  doc.status = result ? fairdisk::io::Status::heuristic : fairdisk::io::Status::infeasible;
  if (result) doc.clustering = *result;
  doc.solver.mode = "heuristic";  // an infeasible verdict here is not a proof
  doc.solver.elapsed_seconds = seconds_since(t0);
  return emit_and_report(doc, args.out_path);
}

int run_oracle(const OracleArgs& args) {
  const auto ni = fairdisk::io::parse_instance(read_file(args.instance_path));
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = fairdisk::oracle::oracle_solve(ni.instance, args.budget);

  fairdisk::io::ResultDocument doc;
  doc.status = result ? fairdisk::io::Status::optimal : fairdisk::io::Status::infeasible;
  if (result) doc.clustering = *result;
  doc.solver.mode = "oracle";
  doc.solver.elapsed_seconds = seconds_since(t0);
  return emit_and_report(doc, args.out_path);
}

int run_validate(const FileArgs& args) {
  const auto ni = fairdisk::io::parse_instance(read_file(args.instance_path));
  const auto doc = fairdisk::io::parse_result(read_file(args.result_path));
  if (doc.status == fairdisk::io::Status::infeasible) {
    std::cout << "result is infeasible; nothing to validate\n";
    return kExitOk;
  }
  const auto violations = fairdisk::fair::validate(ni.instance, doc.clustering);
  if (violations.empty()) {
    std::cout << "ok: clustering satisfies coverage and color bounds\n";
    return kExitOk;
  }
  for (const auto& v : violations) std::cerr << "violation: " << v.message << "\n";
  return kExitError;
}

int run_plot(const FileArgs& args) {
  const auto ni = fairdisk::io::parse_instance(read_file(args.instance_path));
  const auto doc = fairdisk::io::parse_result(read_file(args.result_path));
  if (doc.status != fairdisk::io::Status::infeasible) {
    const auto violations = fairdisk::fair::validate(ni.instance, doc.clustering);
    if (!violations.empty()) {
      for (const auto& v : violations) std::cerr << "violation: " << v.message << "\n";
      throw std::runtime_error("refusing to plot a result that fails validation");
    }
  }
  write_output(fairdisk::io::render_svg(ni, doc), args.out_path);
  return kExitOk;
}

void apply_epsilon_override() {
  const char* env = std::getenv("FAIRDISK_EPS");
  if (!env || !*env) return;
  char* end = nullptr;
  const double eps = std::strtod(env, &end);
  if (end == env || *end != '\0') {
    throw std::runtime_error("FAIRDISK_EPS is not a number: '" + std::string(env) + "'");
  }
  fairdisk::geom::set_epsilon(eps);  // rejects non-positive values
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fairdisk: exact fair k-clustering on the plane"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Exact minimum-radius fair clustering");
  solve->add_option("instance", solve_args.instance_path, "Instance file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--scan", solve_args.scan, "Radius scan strategy")
      ->check(CLI::IsMember({"full", "binary"}))
      ->capture_default_str();
  solve->add_option("--parallel", solve_args.parallel, "Evaluate candidates in parallel")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  solve->add_option("--out", solve_args.out_path, "Write the result here instead of stdout");

  HeuristicArgs heur_args;
  auto* heuristic =
      app.add_subcommand("heuristic", "Randomized search over candidate disk sets");
  heuristic->add_option("instance", heur_args.instance_path, "Instance file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  heuristic->add_option("--samples", heur_args.samples, "Number of candidate sets to try")
      ->required()
      ->check(CLI::PositiveNumber);
  heuristic->add_option("--seed", heur_args.seed, "Random seed")->capture_default_str();
  heuristic->add_option("--out", heur_args.out_path, "Write the result here instead of stdout");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Brute-force solver for tiny instances");
  oracle->add_option("instance", oracle_args.instance_path, "Instance file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  oracle->add_option("--budget", oracle_args.budget, "Maximum k^n labelings to enumerate")
      ->capture_default_str();
  oracle->add_option("--out", oracle_args.out_path, "Write the result here instead of stdout");

  FileArgs validate_args;
  auto* validate = app.add_subcommand("validate", "Check a result against its instance");
  validate->add_option("instance", validate_args.instance_path, "Instance file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  validate->add_option("result", validate_args.result_path, "Result file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);

  FileArgs plot_args;
  auto* plot = app.add_subcommand("plot", "Render an instance and result as SVG");
  plot->add_option("instance", plot_args.instance_path, "Instance file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  plot->add_option("result", plot_args.result_path, "Result file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  plot->add_option("--out", plot_args.out_path, "Write the SVG here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    apply_epsilon_override();
    if (solve->parsed()) return run_solve(solve_args);
    if (heuristic->parsed()) return run_heuristic(heur_args);
    if (oracle->parsed()) return run_oracle(oracle_args);
    if (validate->parsed()) return run_validate(validate_args);
    if (plot->parsed()) return run_plot(plot_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
