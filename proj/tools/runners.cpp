#include "runners.hpp"

#include "flags.hpp"

#include "wsqrt/binomial_map.hpp"
#include "wsqrt/ito.hpp"
#include "wsqrt/paths.hpp"
#include "wsqrt/pde.hpp"
#include "wsqrt/philox.hpp"
#include "wsqrt/regularization.hpp"
#include "wsqrt/sqrt_process.hpp"
#include "wsqrt/stats.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace wsqrt::cli {

namespace {

using cplx = std::complex<double>;

Check make_check(std::string name, bool passed, json observed, json expected, json tolerance) {
  return {std::move(name), passed, std::move(observed), std::move(expected),
          std::move(tolerance)};
}

Check abs_tolerance_check(std::string name, double observed, double expected, double tol) {
  return make_check(std::move(name), std::abs(observed - expected) <= tol,
                    format_double(observed), format_double(expected), tol);
}

Check complex_tolerance_check(std::string name, cplx observed, cplx expected, double tol) {
  return make_check(std::move(name), std::abs(observed - expected) <= tol,
                    format_complex(observed), format_complex(expected), tol);
}

std::vector<ComplexRational> random_nonzero_rationals(std::size_t count, std::uint64_t seed) {
  NormalStream stream(seed, 0);
  auto small_int = [&](int lo, int hi) {
    return lo + static_cast<long>(stream.next_uniform() * (hi - lo + 1));
  };
  std::vector<ComplexRational> out;
  while (out.size() < count) {
    ComplexRational z{Rational(small_int(-5, 5), small_int(1, 6)),
                      Rational(small_int(-5, 5), small_int(1, 6))};
    if (!z.is_zero()) out.push_back(z);
  }
  return out;
}

json merged_config(const RunConfig& cfg, json block) {
  block["seed"] = cfg.seed;
  block["output_dir"] = cfg.output_dir;
  block["format"] = cfg.format;
  return block;
}

}  // namespace

unsigned RunConfig::resolved_workers() const {
  if (workers != 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

Report run_verify_ito(const RunConfig& cfg) {
  Report report;
  report.command = "verify ito";
  report.config = merged_config(cfg, {{"mu0", cfg.mu0}, {"samples", cfg.ito_samples}});

  const ComplexRational mu0 = parse_complex_rational(cfg.mu0);
  const ItoExpr reduced = reduce_ansatz_square(free_sqrt_ansatz(mu0));
  const ItoExpr expected = ItoExpr(Monomial::SignDW, Poly(mu0 * mu0)) + ItoExpr(Monomial::DW);
  report.checks.push_back(make_check("theorem_reduction", reduced == expected,
                                     reduced.to_string(), expected.to_string(), nullptr));

  std::size_t mismatches = 0;
  for (const auto& sample : random_nonzero_rationals(cfg.ito_samples, cfg.seed)) {
    const ItoExpr got = reduce_ansatz_square(free_sqrt_ansatz(sample));
    const ItoExpr want = ItoExpr(Monomial::SignDW, Poly(sample * sample)) + ItoExpr(Monomial::DW);
    if (!(got == want)) ++mismatches;
  }
  report.checks.push_back(
      make_check("theorem_random_mu0_mismatches", mismatches == 0, mismatches, 0, 0));

  const ItoExpr corollary = reduce_ansatz_square(interacting_sqrt_ansatz());
  const std::string corollary_expected = "1/4·sign(dW) + dW + V·dt";
  report.checks.push_back(make_check("corollary_reduction",
                                     corollary.to_string() == corollary_expected,
                                     corollary.to_string(), corollary_expected, nullptr));

  const Poly null_measure = reduced.coeff(Monomial::SignDt);
  report.checks.push_back(make_check("null_measure_coefficient_cancels", null_measure.is_zero(),
                                     null_measure.to_string(), "0", nullptr));
  return report;
}

Report run_verify_phase(const RunConfig& cfg) {
  Report report;
  report.command = "verify phase";
  report.config = merged_config(cfg, {{"n", cfg.phase_n}});
  if (cfg.phase_n == 0) throw std::invalid_argument("verify phase: --n must be >= 1");

  const std::size_t n = cfg.phase_n;
  const WienerPath w = generate_wiener(n, 1.0 / static_cast<double>(n), cfg.seed, 0);
  const IncrementDecomposition d = decompose(w);
  const PhasePath phases = phase_path(d);

  std::size_t bad_value = 0, bad_square = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx phi = phases.phases[k];
    if (!(phi == cplx{1.0, 0.0} || phi == cplx{0.0, 1.0})) ++bad_value;
    if (phi * phi != cplx{d.signs[k], 0.0}) ++bad_square;
  }
  report.checks.push_back(make_check("phase_two_valued", bad_value == 0, bad_value, 0, 0));
  report.checks.push_back(
      make_check("phase_square_equals_sign", bad_square == 0, bad_square, 0, 0));

  const PhaseMoments m = phase_moments(phases);
  const double root_n = std::sqrt(static_cast<double>(n));
  report.checks.push_back(complex_tolerance_check(
      "phase_mean", m.mean, cplx{0.5, 0.5}, 4.0 * (std::numbers::sqrt2 / 2.0) / root_n));
  report.checks.push_back(complex_tolerance_check("phase_variance", m.variance, cplx{0.0, -0.5},
                                                  8.0 / static_cast<double>(n)));
  return report;
}

Report run_verify_variation(const RunConfig& cfg) {
  Report report;
  report.command = "verify variation";
  report.config = merged_config(cfg, {{"n", cfg.variation_n},
                                      {"ladder", cfg.variation_ladder},
                                      {"residual_paths", cfg.residual_paths}});
  if (cfg.variation_n == 0 || cfg.residual_paths == 0 || cfg.variation_ladder.size() < 2) {
    throw std::invalid_argument("verify variation: need n >= 1, paths >= 1, ladder >= 2 entries");
  }
  const unsigned workers = cfg.resolved_workers();

  {
    const std::size_t n = cfg.variation_n;
    const WienerPath p = generate_wiener(n, 1.0 / static_cast<double>(n), cfg.seed, 0);
    report.checks.push_back(abs_tolerance_check("quadratic_variation", power_variation(p, 2.0),
                                                1.0,
                                                3.0 * std::sqrt(2.0 / static_cast<double>(n))));
  }
  {
    std::vector<double> ns, values;
    for (std::size_t j = 0; j < cfg.variation_ladder.size(); ++j) {
      const std::size_t n = cfg.variation_ladder[j];
      const WienerPath p = generate_wiener(n, 1.0 / static_cast<double>(n), cfg.seed, 10 + j);
      ns.push_back(static_cast<double>(n));
      values.push_back(power_variation(p, 3.0));
    }
    report.checks.push_back(
        abs_tolerance_check("cubic_variation_slope", fit_loglog_slope(ns, values), -0.5, 0.1));
  }
  {
    const std::size_t n = cfg.variation_n;
    const double dt = 1.0 / static_cast<double>(n);
    const WienerPath p = generate_wiener(n, dt, cfg.seed, 42);
    const double expected = std::sqrt(2.0 * dt / std::numbers::pi);
    const double se =
        std::sqrt((1.0 - 2.0 / std::numbers::pi) * dt / static_cast<double>(n));
    report.checks.push_back(
        abs_tolerance_check("abs_increment_mean", abs_increment_mean(p), expected, 4.0 * se));
  }

  const ResidualStats r1k =
      residual_ensemble_stats(cfg.seed, cfg.residual_paths, 1000, 1e-3, 0.0, workers);
  report.checks.push_back(complex_tolerance_check("residual_mean_n1000", r1k.mean, cplx{},
                                                  4.0 * r1k.standard_error));
  const ResidualStats r10k =
      residual_ensemble_stats(cfg.seed, cfg.residual_paths, 10000, 1e-4, 0.0, workers);
  report.checks.push_back(complex_tolerance_check("residual_mean_n10000", r10k.mean, cplx{},
                                                  4.0 * r10k.standard_error));
  const ResidualStats r4k =
      residual_ensemble_stats(cfg.seed, cfg.residual_paths, 4000, 2.5e-4, 0.0, workers);
  report.checks.push_back(
      abs_tolerance_check("residual_rms_halving", r4k.rms / r1k.rms, 0.5, 0.15));
  return report;
}

Report run_regularize(const RunConfig& cfg) {
  Report report;
  report.command = "regularize";
  report.config = merged_config(
      cfg, {{"n", cfg.reg_n}, {"paths", cfg.reg_paths}, {"ladder", cfg.reg_ladder}});
  if (cfg.reg_n == 0 || cfg.reg_paths == 0 || cfg.reg_ladder.empty()) {
    throw std::invalid_argument("regularize: need n >= 1, paths >= 1, nonempty ladder");
  }
  const unsigned workers = cfg.resolved_workers();
  const double two_over_pi = 2.0 / std::numbers::pi;

  const RegularizedSum raw = abs_integral_mean_square(cfg.reg_n, false);
  report.checks.push_back(abs_tolerance_check(
      "raw_mean_square_formula", raw.raw_value, two_over_pi * static_cast<double>(cfg.reg_n),
      0.0));

  const EnsembleStats mc = abs_sum_mean_square_mc_seeded(cfg.seed, cfg.reg_paths, cfg.reg_n,
                                                         1.0 / static_cast<double>(cfg.reg_n),
                                                         workers);
  report.checks.push_back(abs_tolerance_check("raw_matches_monte_carlo", mc.mean, raw.raw_value,
                                              4.0 * mc.standard_error));

  const RegularizedSum reg = abs_integral_mean_square(cfg.reg_n, true);
  report.checks.push_back(abs_tolerance_check(
      "regularized_value", reg.regularized_value.value(),
      two_over_pi / (4.0 * static_cast<double>(cfg.reg_n)), 1e-15));

  Table table;
  table.columns = {"n", "raw", "regularized"};
  json ladder_values = json::array();
  bool decreasing = true;
  double prev = std::numeric_limits<double>::infinity();
  for (const std::size_t n : cfg.reg_ladder) {
    const RegularizedSum row = abs_integral_mean_square(n, true);
    const double value = row.regularized_value.value();
    decreasing = decreasing && value < prev;
    prev = value;
    ladder_values.push_back(value);
    table.rows.push_back({std::to_string(n), format_double(row.raw_value),
                          format_double(value)});
  }
  report.checks.push_back(make_check("regularized_monotone_decreasing", decreasing,
                                     ladder_values, "strictly decreasing", nullptr));

  const EnsembleStats sign_stats = sign_integral_stats_seeded(
      cfg.seed, cfg.reg_paths, cfg.reg_n, 1.0 / static_cast<double>(cfg.reg_n), workers);
  report.checks.push_back(abs_tolerance_check("sign_integral_mean", sign_stats.mean, 0.0,
                                              4.0 * sign_stats.standard_error));

  write_table(cfg.output_dir, "regularize_table", cfg.format, table);
  return report;
}

Report run_pde(const RunConfig& cfg) {
  Report report;
  report.command = "pde";
  report.config = merged_config(cfg, {{"beta", cfg.beta},
                                      {"delta_x", cfg.delta_x},
                                      {"x_min", cfg.x_min},
                                      {"x_max", cfg.x_max},
                                      {"dx", cfg.dx},
                                      {"dt", cfg.dt},
                                      {"t_final", cfg.t_final},
                                      {"moment_samples", cfg.moment_samples}});
  if (cfg.moment_samples < 3) throw std::invalid_argument("pde: --samples must be >= 3");
  if (!(cfg.t_final > 0.0) || !(cfg.dt > 0.0) || !(cfg.delta_x > 0.0)) {
    throw std::invalid_argument("pde: t_final, dt and delta_x must be positive");
  }

  const cplx beta = parse_beta(cfg.beta);
  const GridSpec grid{cfg.x_min, cfg.x_max, cfg.dx};
  const EvolutionCoefficients coeffs = free_coefficients(beta);
  const bool reduced_equation = std::abs(coeffs.advection) == 0.0;

  const double segment = cfg.t_final / static_cast<double>(cfg.moment_samples - 1);
  const auto steps_per_segment = static_cast<std::size_t>(std::llround(segment / cfg.dt));
  if (steps_per_segment == 0 ||
      std::abs(static_cast<double>(steps_per_segment) * cfg.dt - segment) > 1e-9) {
    throw std::invalid_argument("pde: dt must divide t_final/(samples-1)");
  }

  WaveGrid psi = gaussian_packet(cfg.delta_x, grid);
  std::vector<double> times{0.0}, norms, means, variances;
  std::vector<double> oracle_errors;
  const Moments m0 = moments(psi);
  norms.push_back(m0.norm);
  means.push_back(m0.mean);
  variances.push_back(m0.variance);
  if (reduced_equation) oracle_errors.push_back(0.0);

  for (std::size_t k = 1; k < cfg.moment_samples; ++k) {
    psi = evolve(psi, coeffs, cfg.dt, steps_per_segment);
    times.push_back(psi.time);
    const Moments m = moments(psi);
    norms.push_back(m.norm);
    means.push_back(m.mean);
    variances.push_back(m.variance);
    if (reduced_equation) {
      const WaveGrid exact = analytic_free(cfg.delta_x, psi.time, grid);
      double acc = 0.0;
      for (std::size_t j = 0; j < psi.size(); ++j) acc += std::norm(psi.values[j] - exact.values[j]);
      oracle_errors.push_back(std::sqrt(psi.dx * acc));
    }
  }

  if (reduced_equation) {
    double max_err = 0.0;
    for (const double e : oracle_errors) max_err = std::max(max_err, e);
    report.checks.push_back(abs_tolerance_check("oracle_l2_error", max_err, 0.0, 1e-3));

    double drift = 0.0;
    for (const double n : norms) drift = std::max(drift, std::abs(n - norms.front()));
    report.checks.push_back(abs_tolerance_check("norm_drift", drift, 0.0, 1e-8));

    // Same experiment at (dx/2, dt/2) up to t = min(1, t_final); second-order
    // stepping should shrink the oracle error about fourfold.
    const double t_ref = std::min(1.0, cfg.t_final);
    const auto coarse_steps = static_cast<std::size_t>(std::llround(t_ref / cfg.dt));
    const GridSpec fine_grid{cfg.x_min, cfg.x_max, cfg.dx / 2.0};
    auto l2_error_at = [&](const GridSpec& g, double dt, std::size_t steps) {
      const WaveGrid run = evolve(gaussian_packet(cfg.delta_x, g), coeffs, dt, steps);
      const WaveGrid exact = analytic_free(cfg.delta_x, run.time, g);
      double acc = 0.0;
      for (std::size_t j = 0; j < run.size(); ++j) acc += std::norm(run.values[j] - exact.values[j]);
      return std::sqrt(run.dx * acc);
    };
    const double err_coarse = l2_error_at(grid, cfg.dt, coarse_steps);
    const double err_fine = l2_error_at(fine_grid, cfg.dt / 2.0, coarse_steps * 2);
    report.checks.push_back(
        abs_tolerance_check("refinement_error_ratio", err_coarse / err_fine, 4.0, 1.0));

    report.checks.push_back(abs_tolerance_check(
        "variance_quadratic_fit_residual",
        quadratic_fit_relative_residual(times, variances), 0.0, 1e-4));
  } else {
    bool finite = true;
    for (const cplx& z : psi.values) finite = finite && std::isfinite(std::abs(z));
    report.checks.push_back(make_check("values_finite", finite, finite, true, nullptr));
  }

  Table moments_table;
  moments_table.columns = {"t", "norm", "mean", "variance"};
  for (std::size_t k = 0; k < times.size(); ++k) {
    moments_table.rows.push_back({format_double(times[k]), format_double(norms[k]),
                                  format_double(means[k]), format_double(variances[k])});
  }
  write_table(cfg.output_dir, "pde_moments", cfg.format, moments_table);

  Table wave_table;
  wave_table.columns = {"x", "re_psi", "im_psi"};
  for (std::size_t j = 0; j < psi.size(); ++j) {
    wave_table.rows.push_back({format_double(psi.x(j)), format_double(psi.values[j].real()),
                               format_double(psi.values[j].imag())});
  }
  write_table(cfg.output_dir, "pde_wave", cfg.format, wave_table);
  return report;
}

Report run_map(const RunConfig& cfg) {
  Report report;
  report.command = "map";
  report.config = merged_config(cfg, {{"n", cfg.map_n}, {"ladder", cfg.map_ladder}});
  if (cfg.map_ladder.empty()) throw std::invalid_argument("map: ladder must be nonempty");

  double worst_norm_dev = 0.0;
  double worst_pmf_dev = 0.0;
  for (unsigned n = 0; n <= 64; ++n) {
    const auto pmf = binom_pmf(n);
    const DiscreteWave wave = discrete_wave(n);
    const cplx self = inner(wave, wave);
    worst_norm_dev = std::max(worst_norm_dev, std::abs(self - cplx{1.0, 0.0}));
    for (unsigned k = 0; k <= n; ++k) {
      worst_pmf_dev = std::max(
          worst_pmf_dev, std::abs(std::norm(wave.values[k]) - pmf[k].convert_to<double>()));
    }
  }
  report.checks.push_back(
      abs_tolerance_check("wave_norm_unity_n_le_64", worst_norm_dev, 0.0, 1e-12));
  report.checks.push_back(
      abs_tolerance_check("squared_moduli_match_pmf_n_le_64", worst_pmf_dev, 0.0, 1e-15));

  json ladder_values = json::array();
  bool decreasing = true;
  double prev = std::numeric_limits<double>::infinity();
  for (const unsigned n : cfg.map_ladder) {
    const double err = gaussian_local_limit_error(n);
    decreasing = decreasing && err < prev;
    prev = err;
    ladder_values.push_back(err);
  }
  report.checks.push_back(make_check("local_limit_error_strictly_decreasing", decreasing,
                                     ladder_values, "strictly decreasing", nullptr));

  const auto pmf = binom_pmf(cfg.map_n);
  const DiscreteWave wave = discrete_wave(cfg.map_n);
  Table table;
  table.columns = {"k", "pmf", "abs_psi_sq"};
  for (unsigned k = 0; k <= cfg.map_n; ++k) {
    table.rows.push_back({std::to_string(k), format_double(pmf[k].convert_to<double>()),
                          format_double(std::norm(wave.values[k]))});
  }
  write_table(cfg.output_dir, "map_table", cfg.format, table);
  return report;
}

Report run_all(const RunConfig& cfg) {
  Report report;
  report.command = "all";

  struct Part {
    const char* prefix;
    Report (*runner)(const RunConfig&);
  };
  const Part parts[] = {
      {"ito", run_verify_ito},       {"phase", run_verify_phase},
      {"variation", run_verify_variation}, {"regularize", run_regularize},
      {"pde", run_pde},              {"map", run_map},
  };
  json config = merged_config(cfg, {});
  for (const Part& part : parts) {
    Report sub = part.runner(cfg);
    config[part.prefix] = sub.config;
    for (Check& check : sub.checks) {
      check.name = std::string(part.prefix) + "." + check.name;
      report.checks.push_back(std::move(check));
    }
  }
  report.config = std::move(config);
  return report;
}

}  // namespace wsqrt::cli
