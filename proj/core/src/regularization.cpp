#include "wsqrt/regularization.hpp"

#include "wsqrt/stats.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wsqrt {

Rational assign_divergent(DivergentSeries kind) {
  switch (kind) {
    case DivergentSeries::AllOnes:
      return Rational(-1, 2);  // zeta(0)
    case DivergentSeries::AlternatingUnits:
      return Rational(-1, 2);  // Abel value of sum (-1)^n
  }
  throw std::invalid_argument("assign_divergent: series not licensed by the scheme");
}

RegularizedSum abs_integral_mean_square(std::size_t n, bool regularize) {
  if (n == 0) throw std::invalid_argument("abs_integral_mean_square: n must be >= 1");
  RegularizedSum out;
  out.n = n;
  const double two_over_pi = 2.0 / std::numbers::pi;
  out.raw_value = two_over_pi * static_cast<double>(n);
  if (regularize) {
    const Rational assigned = assign_divergent(DivergentSeries::AllOnes);
    // (1/n)·(assigned sum)² stays exact until the final 2/pi scaling.
    const Rational exact = assigned * assigned / Rational(n);
    out.regularized_value = two_over_pi * exact.convert_to<double>();
    out.method = RegularizationMethod::Zeta;
  }
  return out;
}

namespace {

EnsembleStats stats_from_samples(const std::vector<double>& samples) {
  const SampleStats s = sample_stats(samples);
  return {s.mean, s.standard_error, s.count};
}

double path_sign_sum(const WienerPath& p) {
  CompensatedSum acc;
  for (const double w : p.increments) acc.add(w < 0.0 ? -1.0 : 1.0);
  return acc.value();
}

double path_abs_sum_squared(const WienerPath& p) {
  CompensatedSum acc;
  for (const double w : p.increments) acc.add(std::abs(w));
  const double s = acc.value();
  return s * s;
}

void check_uniform_length(std::span<const WienerPath> ensemble) {
  if (ensemble.empty()) throw std::invalid_argument("ensemble must be nonempty");
  const std::size_t n = ensemble.front().size();
  for (const auto& p : ensemble) {
    if (p.size() != n) throw std::invalid_argument("ensemble paths must share n");
  }
}

}  // namespace

EnsembleStats sign_integral_stats(std::span<const WienerPath> ensemble) {
  check_uniform_length(ensemble);
  std::vector<double> samples(ensemble.size());
  for (std::size_t i = 0; i < ensemble.size(); ++i) samples[i] = path_sign_sum(ensemble[i]);
  return stats_from_samples(samples);
}

EnsembleStats sign_integral_stats_seeded(std::uint64_t seed, std::size_t paths, std::size_t n,
                                         double dt, unsigned workers) {
  if (paths == 0) throw std::invalid_argument("ensemble must be nonempty");
  std::vector<double> samples(paths);
  parallel_for_index(paths, workers, [&](std::size_t p) {
    samples[p] = path_sign_sum(generate_wiener(n, dt, seed, p));
  });
  return stats_from_samples(samples);
}

EnsembleStats abs_sum_mean_square_mc(std::span<const WienerPath> ensemble) {
  check_uniform_length(ensemble);
  std::vector<double> samples(ensemble.size());
  for (std::size_t i = 0; i < ensemble.size(); ++i) samples[i] = path_abs_sum_squared(ensemble[i]);
  return stats_from_samples(samples);
}

EnsembleStats abs_sum_mean_square_mc_seeded(std::uint64_t seed, std::size_t paths, std::size_t n,
                                            double dt, unsigned workers) {
  if (paths == 0) throw std::invalid_argument("ensemble must be nonempty");
  std::vector<double> samples(paths);
  parallel_for_index(paths, workers, [&](std::size_t p) {
    samples[p] = path_abs_sum_squared(generate_wiener(n, dt, seed, p));
  });
  return stats_from_samples(samples);
}

}  // namespace wsqrt
