#include "wsqrt/paths.hpp"

#include "wsqrt/philox.hpp"
#include "wsqrt/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace wsqrt {

double WienerPath::terminal_value() const {
  return compensated_sum(increments);
}

std::vector<double> WienerPath::cumulative() const {
  std::vector<double> out(increments.size() + 1, 0.0);
  CompensatedSum acc;
  for (std::size_t i = 0; i < increments.size(); ++i) {
    acc.add(increments[i]);
    out[i + 1] = acc.value();
  }
  return out;
}

WienerPath generate_wiener(std::size_t n, double dt, std::uint64_t seed,
                           std::uint64_t path_index, double t0) {
  if (n == 0) throw std::invalid_argument("generate_wiener: n must be >= 1");
  if (!(dt > 0.0)) throw std::invalid_argument("generate_wiener: dt must be > 0");
  WienerPath path;
  path.t0 = t0;
  path.dt = dt;
  path.seed = seed;
  path.path_index = path_index;
  path.increments.resize(n);
  NormalStream stream(seed, path_index);
  const double scale = std::sqrt(dt);
  for (std::size_t i = 0; i < n; ++i) {
    path.increments[i] = scale * stream.next_normal();
  }
  return path;
}

IncrementDecomposition decompose(const WienerPath& path) {
  IncrementDecomposition d;
  d.signs.resize(path.size());
  d.magnitudes.resize(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    const double w = path.increments[i];
    d.signs[i] = w < 0.0 ? -1.0 : 1.0;
    d.magnitudes[i] = std::abs(w);
  }
  return d;
}

double power_variation(const WienerPath& path, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("power_variation: alpha must be > 0");
  CompensatedSum acc;
  for (const double w : path.increments) {
    acc.add(std::pow(std::abs(w), alpha));
  }
  return acc.value();
}

double abs_increment_mean(const WienerPath& path) {
  CompensatedSum acc;
  for (const double w : path.increments) acc.add(std::abs(w));
  return acc.value() / static_cast<double>(path.size());
}

}  // namespace wsqrt
