#pragma once

#include "report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wsqrt::cli {

/// Resolved parameters for one invocation. Numeric fields are validated by
/// the runners before any work starts; the relevant block is echoed into the
/// report's config object.
struct RunConfig {
  std::uint64_t seed = 42;
  unsigned workers = 0;  // 0 = hardware concurrency
  std::string output_dir = "out";
  std::string format = "csv";

  // verify ito
  std::string mu0 = "1/2";
  unsigned ito_samples = 20;

  // verify phase
  std::size_t phase_n = 1000000;

  // verify variation
  std::size_t variation_n = 1000000;
  std::vector<std::size_t> variation_ladder = {1000, 10000, 100000, 1000000};
  std::size_t residual_paths = 10000;

  // regularize
  std::size_t reg_n = 1000;
  std::size_t reg_paths = 10000;
  std::vector<std::size_t> reg_ladder = {10, 100, 1000, 10000};

  // pde
  std::string beta = "schrodinger";
  double delta_x = 1.0;
  double x_min = -20.0;
  double x_max = 20.0;
  double dx = 0.05;
  double dt = 1e-3;
  double t_final = 2.0;
  std::size_t moment_samples = 5;

  // map
  unsigned map_n = 64;
  std::vector<unsigned> map_ladder = {16, 64, 256};

  unsigned resolved_workers() const;
};

Report run_verify_ito(const RunConfig& cfg);
Report run_verify_phase(const RunConfig& cfg);
Report run_verify_variation(const RunConfig& cfg);
Report run_regularize(const RunConfig& cfg);
Report run_pde(const RunConfig& cfg);
Report run_map(const RunConfig& cfg);
Report run_all(const RunConfig& cfg);

}  // namespace wsqrt::cli
