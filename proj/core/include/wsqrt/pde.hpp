#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace wsqrt {

/// Uniform 1-D grid; x_max must sit on the grid implied by (x_min, dx).
struct GridSpec {
  double x_min = -20.0;
  double x_max = 20.0;
  double dx = 0.05;

  std::size_t points() const;
};

/// Complex wavefunction samples on a uniform grid; an immutable snapshot in
/// time. Stepping produces new snapshots.
struct WaveGrid {
  double x_min = 0.0;
  double dx = 0.0;
  double time = 0.0;
  std::vector<std::complex<double>> values;

  std::size_t size() const { return values.size(); }
  double x(std::size_t j) const { return x_min + dx * static_cast<double>(j); }
};

/// Coefficients of  psi_t = advection·psi_x + (1-i)/4·(V psi)_x + diffusion·psi_xx.
/// Free case: advection = -(1+i)/4 + beta·(1-i)/2, no potential.
/// Interacting case: advection = -(1+i)/4 with the potential term present.
/// diffusion = -i/4 in both.
struct EvolutionCoefficients {
  std::complex<double> advection;
  std::complex<double> diffusion;
  std::function<double(double x, double t)> potential;  // empty in the free case
};

EvolutionCoefficients free_coefficients(std::complex<double> beta);
EvolutionCoefficients interacting_coefficients(std::function<double(double, double)> potential);

/// beta = i/2, the unique value cancelling the free advection coefficient and
/// leaving psi_t = -(i/4)·psi_xx.
std::complex<double> schrodinger_beta();

/// Normalized Gaussian exp(-x²/(2·delta_x²))/(pi·delta_x²)^(1/4) sampled on
/// the grid. Throws std::invalid_argument when delta_x <= 0 or the boundary
/// amplitude exceeds 1e-12 (grid too narrow).
WaveGrid gaussian_packet(double delta_x, const GridSpec& grid);

/// Trapezoidal (Crank-Nicolson) stepping, centered second-order differences,
/// Dirichlet zero boundaries. Throws std::runtime_error naming the step index
/// if values stop being finite.
WaveGrid evolve(const WaveGrid& psi, const EvolutionCoefficients& c, double dt, std::size_t steps);

/// Exact solution of psi_t = -(i/4)·psi_xx with gaussian_packet(delta_x)
/// initial data: Gaussian with complex width a(t) = delta_x² - i·t/2,
///   psi(x,t) = (pi·delta_x²)^(-1/4) · sqrt(a/a(t)) · exp(-x²/(2·a(t))).
/// Derived by Fourier transform and cross-checked against fine-grid evolve
/// runs in the test suite.
WaveGrid analytic_free(double delta_x, double t, const GridSpec& grid);

struct Moments {
  double norm = 0.0;      // dx·Sum |psi_j|² (discrete L² mass)
  double mean = 0.0;      // of the normalized density |psi|²/norm
  double variance = 0.0;
};

/// Throws std::invalid_argument when the norm vanishes.
Moments moments(const WaveGrid& psi);

}  // namespace wsqrt
