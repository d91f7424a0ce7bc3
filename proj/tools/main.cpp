#include "runners.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>

namespace {

using wsqrt::cli::Report;
using wsqrt::cli::RunConfig;

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--seed", cfg.seed, "RNG seed (fixed default keeps runs reproducible)")
      ->capture_default_str();
  cmd->add_option("--workers", cfg.workers, "Worker threads; 0 = hardware concurrency")
      ->capture_default_str();
  cmd->add_option("--output-dir", cfg.output_dir,
                  "Report/table directory (WSQRT_OUTPUT_DIR overrides the default)")
      ->capture_default_str();
  cmd->add_option("--format", cfg.format, "Data table format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

int execute(const RunConfig& cfg, const std::string& name,
            const std::function<Report(const RunConfig&)>& runner) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.output_dir);

  const auto start = std::chrono::steady_clock::now();
  Report report = runner(cfg);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.workers_used = cfg.resolved_workers();

  const fs::path path = wsqrt::cli::write_report(report, cfg.output_dir);
  std::size_t passed = 0;
  for (const auto& check : report.checks) {
    if (check.passed) {
      ++passed;
      std::cout << "[PASS] " << check.name << "\n";
    } else {
      std::cout << "[FAIL] " << check.name << "  observed=" << check.observed.dump()
                << " expected=" << check.expected.dump()
                << " tolerance=" << check.tolerance.dump() << "\n";
    }
  }
  std::cout << name << ": " << passed << "/" << report.checks.size()
            << " checks passed; report written to " << path.string() << std::endl;
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "wsqrt — verification suites for the complex square-root process toolkit:\n"
      "exact Itô reductions, Bernoulli phase statistics, path variations,\n"
      "regularized Riemann sums, the complex-coefficient diffusion solver and\n"
      "the binomial wavefunction map."};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("WSQRT_OUTPUT_DIR")) cfg.output_dir = env;

  std::string selected;
  std::function<Report(const RunConfig&)> runner;
  auto select = [&](const std::string& name, Report (*fn)(const RunConfig&)) {
    return [&selected, &runner, name, fn]() {
      selected = name;
      runner = fn;
    };
  };

  auto* verify = app.add_subcommand("verify", "Run one verification suite");
  verify->require_subcommand(1);

  auto* ito = verify->add_subcommand("ito", "Symbolic theorem/corollary reductions");
  ito->add_option("--mu0", cfg.mu0, "Leading bracket coefficient, rational 're' or 're,im'")
      ->capture_default_str();
  ito->add_option("--samples", cfg.ito_samples, "Random mu0 sample size")->capture_default_str();
  add_common_options(ito, cfg);
  ito->callback(select("verify ito", wsqrt::cli::run_verify_ito));

  auto* phase = verify->add_subcommand("phase", "Bernoulli phase moments");
  phase->add_option("--n", cfg.phase_n, "Number of increments")->capture_default_str();
  add_common_options(phase, cfg);
  phase->callback(select("verify phase", wsqrt::cli::run_verify_phase));

  auto* variation = verify->add_subcommand("variation",
                                           "Power variations and the square-root residual");
  variation->add_option("--n", cfg.variation_n, "Increments for single-path checks")
      ->capture_default_str();
  variation->add_option("--ladder", cfg.variation_ladder, "Partition sizes for the slope fit")
      ->delimiter(',')
      ->capture_default_str();
  variation->add_option("--paths", cfg.residual_paths, "Residual ensemble size")
      ->capture_default_str();
  add_common_options(variation, cfg);
  variation->callback(select("verify variation", wsqrt::cli::run_verify_variation));

  auto* reg = app.add_subcommand("regularize", "Divergent-sum assignments and the |dW| table");
  reg->add_option("--n", cfg.reg_n, "Partition size")->capture_default_str();
  reg->add_option("--paths", cfg.reg_paths, "Monte Carlo ensemble size")->capture_default_str();
  reg->add_option("--ladder", cfg.reg_ladder, "Partition sizes for the decay table")
      ->delimiter(',')
      ->capture_default_str();
  add_common_options(reg, cfg);
  reg->callback(select("regularize", wsqrt::cli::run_regularize));

  auto* pde = app.add_subcommand("pde", "Complex-coefficient diffusion evolution");
  pde->add_option("--beta", cfg.beta, "Drift parameter 're,im' or the literal 'schrodinger'")
      ->capture_default_str();
  pde->add_option("--delta-x", cfg.delta_x, "Initial packet width")->capture_default_str();
  pde->add_option("--x-min", cfg.x_min, "Grid lower bound")->capture_default_str();
  pde->add_option("--x-max", cfg.x_max, "Grid upper bound")->capture_default_str();
  pde->add_option("--dx", cfg.dx, "Grid spacing")->capture_default_str();
  pde->add_option("--dt", cfg.dt, "Time step")->capture_default_str();
  pde->add_option("--t-final", cfg.t_final, "Evolution horizon")->capture_default_str();
  pde->add_option("--samples", cfg.moment_samples, "Moment sample count (including t = 0)")
      ->capture_default_str();
  add_common_options(pde, cfg);
  pde->callback(select("pde", wsqrt::cli::run_pde));

  auto* map = app.add_subcommand("map", "Binomial wavefunction map and local-limit table");
  map->add_option("--n", cfg.map_n, "Row exported to the table")->capture_default_str();
  map->add_option("--ladder", cfg.map_ladder, "Sizes for the local-limit comparison")
      ->delimiter(',')
      ->capture_default_str();
  add_common_options(map, cfg);
  map->callback(select("map", wsqrt::cli::run_map));

  auto* all = app.add_subcommand("all", "Every suite, one combined report");
  add_common_options(all, cfg);
  all->callback(select("all", wsqrt::cli::run_all));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    return execute(cfg, selected, runner);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
}
