// Copyright 2026 The mvindep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: independence tests on CSV data, simulation
// generation, power estimation, and wall-time benchmarking.
//
// Exit codes: 0 success, 2 validation error (bad names, files, shapes,
// arguments), 1 runtime error (degenerate numerics).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvindep/mvindep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitValidation = 2;

int exit_code_for(mvindep::ErrorKind kind) {
  switch (kind) {
    case mvindep::ErrorKind::zero_variance:
    case mvindep::ErrorKind::degenerate_bandwidth:
    case mvindep::ErrorKind::numerical_error:
      return kExitRuntime;
    default:
      return kExitValidation;
  }
}

std::vector<int> parse_grid(const std::string& text) {
  std::vector<int> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument(item);
      grid.push_back(v);
    } catch (const std::exception&) {
      throw mvindep::Error(mvindep::ErrorKind::spec_error,
                           "grid entries must be positive integers, got '" +
                               item + "'");
    }
  }
  if (grid.empty())
    throw mvindep::Error(mvindep::ErrorKind::spec_error, "grid is empty");
  return grid;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  mvindep::require(out.good(), mvindep::ErrorKind::parse_error,
                   "cannot write '" + path + "'");
  out << text;
}

struct TestOptions {
  std::string statistic;
  std::string x_path;
  std::string y_path;
  int perms = 1000;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool has_header = false;
};

int run_test(const TestOptions& opt, int jobs) {
  const mvindep::OutputFormat format = mvindep::parse_format(opt.format);
  const mvindep::Statistic& stat = mvindep::find_statistic(opt.statistic);
  mvindep::RunConfig config{opt.statistic, opt.perms, opt.seed, 0.05, format};
  config.validate();
  const mvindep::Dataset data =
      mvindep::load_dataset(opt.x_path, opt.y_path, opt.has_header);
  const mvindep::TestResult result = mvindep::permutation_test(
      stat, data.x, data.y, opt.perms, opt.seed, jobs);
  std::cout << mvindep::write_result(result, format);
  return kExitOk;
}

struct SimulateOptions {
  std::string kind;
  int n = 100;
  int p = 1;
  double kappa = 1.0;
  std::uint64_t seed = 0;
  std::string out_prefix;
};

int run_simulate(const SimulateOptions& opt) {
  const mvindep::SimInfo& info = mvindep::find_simulation(opt.kind);
  mvindep::SimSpec spec{info.kind, opt.n, opt.p, opt.kappa, opt.seed};
  const mvindep::SimulatedPair pair = mvindep::simulate(spec);
  mvindep::write_csv(opt.out_prefix + "_x.csv", pair.x);
  mvindep::write_csv(opt.out_prefix + "_y.csv", pair.y);
  return kExitOk;
}

struct PowerOptions {
  std::string statistic;
  std::string kind;
  std::string axis = "n";
  std::string grid = "10,50,100";
  double alpha = 0.05;
  int replicates = 500;
  int perms = 200;
  double kappa = 1.0;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out;
};

int run_power(const PowerOptions& opt, int jobs) {
  const mvindep::OutputFormat format = mvindep::parse_format(opt.format);
  const mvindep::Statistic& stat = mvindep::find_statistic(opt.statistic);
  const mvindep::SimInfo& info = mvindep::find_simulation(opt.kind);
  mvindep::PowerAxis axis;
  if (opt.axis == "n")
    axis = mvindep::PowerAxis::sample_size;
  else if (opt.axis == "p")
    axis = mvindep::PowerAxis::dimension;
  else
    throw mvindep::Error(mvindep::ErrorKind::spec_error,
                         "axis must be 'n' (sample size) or 'p' (dimension), got '" +
                             opt.axis + "'");
  const mvindep::PowerCurve curve = mvindep::estimate_power(
      stat, info.kind, axis, parse_grid(opt.grid), opt.alpha, opt.replicates,
      opt.perms, opt.seed, opt.kappa, jobs);
  write_text(opt.out, format == mvindep::OutputFormat::csv
                          ? mvindep::write_power_csv(curve)
                          : mvindep::write_power_json(curve));
  return kExitOk;
}

struct BenchOptions {
  std::string statistics = "dcorr";
  std::string grid = "250,500,1000";
  int reps = 3;
  std::uint64_t seed = 0;
  std::string out;
};

int run_bench(const BenchOptions& opt) {
  std::vector<mvindep::BenchRow> rows;
  std::stringstream ss(opt.statistics);
  std::string name;
  const std::vector<int> grid = parse_grid(opt.grid);
  while (std::getline(ss, name, ',')) {
    const mvindep::Statistic& stat = mvindep::find_statistic(name);
    const auto stat_rows = mvindep::wall_time_bench(stat, grid, opt.reps, opt.seed);
    rows.insert(rows.end(), stat_rows.begin(), stat_rows.end());
  }
  write_text(opt.out, mvindep::write_bench_csv(rows));
  return kExitOk;
}

int run_list() {
  const auto& stats = mvindep::all_statistics();
  std::cout << "statistics (" << stats.size() << "):\n";
  for (const auto& s : stats) std::cout << "  " << s.name << '\n';
  const auto& sims = mvindep::list_simulations();
  std::cout << "simulations (" << sims.size() << "):\n";
  for (const auto& info : sims) {
    std::cout << "  " << info.name << "  (R^p x "
              << (info.y_is_multivariate ? "R^p" : "R") << ")\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multivariate independence and k-sample testing"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads (0 = all cores)")
      ->capture_default_str();

  TestOptions test_opt;
  CLI::App* test = app.add_subcommand("test", "independence test on CSV data");
  test->add_option("--stat", test_opt.statistic, "statistic name")->required();
  test->add_option("--x", test_opt.x_path, "x data CSV")->required();
  test->add_option("--y", test_opt.y_path, "y data CSV")->required();
  test->add_option("--perms", test_opt.perms, "permutation count")
      ->capture_default_str();
  test->add_option("--seed", test_opt.seed, "random seed")->capture_default_str();
  test->add_option("--format", test_opt.format, "output format: json|csv")
      ->capture_default_str();
  test->add_flag("--has-header", test_opt.has_header, "CSV files have a header row");

  SimulateOptions sim_opt;
  CLI::App* sim = app.add_subcommand("simulate", "generate a synthetic dataset");
  sim->add_option("--kind", sim_opt.kind, "simulation name")->required();
  sim->add_option("--n", sim_opt.n, "sample count")->required();
  sim->add_option("--p", sim_opt.p, "dimension")->capture_default_str();
  sim->add_option("--kappa", sim_opt.kappa, "noise level")->capture_default_str();
  sim->add_option("--seed", sim_opt.seed, "random seed")->capture_default_str();
  sim->add_option("--out", sim_opt.out_prefix, "output prefix (_x.csv, _y.csv)")
      ->required();

  PowerOptions power_opt;
  CLI::App* power = app.add_subcommand("power", "estimate statistical power");
  power->add_option("--stat", power_opt.statistic, "statistic name")->required();
  power->add_option("--kind", power_opt.kind, "simulation name")->required();
  power->add_option("--axis", power_opt.axis, "grid axis: n|p")
      ->capture_default_str();
  power->add_option("--grid", power_opt.grid, "comma-separated grid")
      ->capture_default_str();
  power->add_option("--alpha", power_opt.alpha, "significance level")
      ->capture_default_str();
  power->add_option("--replicates", power_opt.replicates, "Monte Carlo replicates")
      ->capture_default_str();
  power->add_option("--perms", power_opt.perms, "permutations per test")
      ->capture_default_str();
  power->add_option("--kappa", power_opt.kappa, "noise level")
      ->capture_default_str();
  power->add_option("--seed", power_opt.seed, "random seed")->capture_default_str();
  power->add_option("--format", power_opt.format, "output format: csv|json")
      ->capture_default_str();
  power->add_option("--out", power_opt.out, "output file (stdout if omitted)");

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand("bench", "statistic wall-time table");
  bench->add_option("--stats", bench_opt.statistics, "comma-separated statistics")
      ->capture_default_str();
  bench->add_option("--grid", bench_opt.grid, "comma-separated sample sizes")
      ->capture_default_str();
  bench->add_option("--reps", bench_opt.reps, "repetitions per point")
      ->capture_default_str();
  bench->add_option("--seed", bench_opt.seed, "random seed")->capture_default_str();
  bench->add_option("--out", bench_opt.out, "output file (stdout if omitted)");

  CLI::App* list = app.add_subcommand("list", "list statistics and simulations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (test->parsed()) return run_test(test_opt, jobs);
    if (sim->parsed()) return run_simulate(sim_opt);
    if (power->parsed()) return run_power(power_opt, jobs);
    if (bench->parsed()) return run_bench(bench_opt);
    if (list->parsed()) return run_list();
  } catch (const mvindep::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}
