#pragma once

#include "wsqrt/exact.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace wsqrt {

/// Exact symmetric-walk pmf C(n,k)/2^n for k = 0..n; sums to 1 exactly.
std::vector<Rational> binom_pmf(unsigned n);

/// The discrete wavefunction psi(n,k) = 2^(-n/2)·C(n,k)^(1/2)·e^(i·theta(k)).
/// Its squared moduli reproduce the coin-tossing pmf for any phase choice.
struct DiscreteWave {
  unsigned n = 0;
  std::vector<std::complex<double>> values;
  std::vector<double> thetas;
};

/// theta supplies the undetermined phase per k; defaults to zero.
DiscreteWave discrete_wave(unsigned n,
                           const std::function<double(unsigned k)>& theta = {});

/// <a,b> = Sum conj(a_k)·b_k; conjugate-linear in the first argument.
/// Throws std::invalid_argument when sizes differ.
std::complex<double> inner(const DiscreteWave& a, const DiscreteWave& b);

/// sup_k | C(n,k)/2^n - g(k) | with g the Normal(n/2, n/4) density: the
/// de Moivre-Laplace comparison. Throws std::invalid_argument for n = 0.
double gaussian_local_limit_error(unsigned n);

}  // namespace wsqrt
