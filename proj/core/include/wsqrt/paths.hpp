#pragma once

#include <cstdint>
#include <vector>

namespace wsqrt {

/// Sampled Brownian increments on a uniform grid t_i = t0 + i·dt.
/// Reproducible: the increment array is a pure function of
/// (seed, path_index, n, dt).
struct WienerPath {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<double> increments;
  std::uint64_t seed = 0;
  std::uint64_t path_index = 0;

  std::size_t size() const { return increments.size(); }
  double duration() const { return dt * static_cast<double>(increments.size()); }
  /// W(T) - W(t0), summed in index order with compensation.
  double terminal_value() const;
  /// W(t_k) - W(t0) for k = 0..n.
  std::vector<double> cumulative() const;
};

/// Sign/magnitude factorization of the increments: signs[i]·magnitudes[i]
/// reconstructs increments[i] exactly. sign(0) = +1 by convention.
struct IncrementDecomposition {
  std::vector<double> signs;
  std::vector<double> magnitudes;
};

/// i.i.d. Normal(0, dt) increments from the keyed Philox substream
/// (seed, path_index). Throws std::invalid_argument for n = 0 or dt <= 0.
WienerPath generate_wiener(std::size_t n, double dt, std::uint64_t seed,
                           std::uint64_t path_index, double t0 = 0.0);

IncrementDecomposition decompose(const WienerPath& path);

/// Sum_i |dW_i|^alpha. Throws std::invalid_argument for alpha <= 0.
double power_variation(const WienerPath& path, double alpha);

/// (1/n)·Sum |dW_i|; expectation sqrt(2·dt/pi).
double abs_increment_mean(const WienerPath& path);

}  // namespace wsqrt
