#pragma once

#include "wsqrt/paths.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace wsqrt {

/// Bernoulli phase factor per increment: (1-i)/2·sign + (1+i)/2, i.e. 1 for a
/// positive increment and i for a negative one. Phi² collapses back to the
/// sign sequence.
struct PhasePath {
  std::vector<std::complex<double>> phases;
};

PhasePath phase_path(const IncrementDecomposition& d);

struct PhaseMoments {
  std::complex<double> mean;
  /// Unconjugated second central moment (1/N)·Sum (Phi - mean)²; only this
  /// convention produces the complex value -i/2.
  std::complex<double> variance;
};

/// Throws std::invalid_argument on an empty path.
PhaseMoments phase_moments(const PhasePath& p);

enum class DriftKind { Free, Potential };

/// Increments of the complex square-root process
///   dX = [1/2 + |dW| + (-1 + b·sign(dW))·dt]·Phi,
/// with b = beta (free) or b = V(X,t) evaluated at the pre-step position.
struct ComplexProcessPath {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<std::complex<double>> increments;
  std::complex<double> beta;  // drift parameter; unused marker in the potential case
  DriftKind kind = DriftKind::Free;
  std::complex<double> x0;

  std::size_t size() const { return increments.size(); }
  /// Running positions X_0..X_n (X_0 = x0).
  std::vector<std::complex<double>> cumulative() const;
};

ComplexProcessPath sample_free(const WienerPath& w, std::complex<double> beta,
                               std::complex<double> x0 = 0.0);

/// Potential evaluated at (pre-step position, step start time): the
/// non-anticipating convention.
using Potential = std::function<std::complex<double>(std::complex<double> x, double t)>;

ComplexProcessPath sample_potential(const WienerPath& w, const Potential& potential,
                                    std::complex<double> x0 = 0.0);

/// Residual of the squared increments against the theorem's right-hand side:
///   R = Sum (dX_k)² - [ (1/4)·Sum sign_k + (W(T)-W(t0)) + beta·T ].
/// Mean zero (beta = 0) and L²-vanishing as dt -> 0 at fixed T. Throws
/// std::invalid_argument on length mismatch.
std::complex<double> square_variation_residual(const ComplexProcessPath& x, const WienerPath& w,
                                               std::complex<double> beta);

struct ResidualStats {
  std::complex<double> mean;
  double standard_error = 0.0;  // scatter of R over the ensemble / sqrt(paths)
  double rms = 0.0;             // sqrt(mean |R|²)
  std::size_t paths = 0;
};

/// Residual statistics over the canonical keyed ensemble; fixed-order
/// reduction, worker-count independent.
ResidualStats residual_ensemble_stats(std::uint64_t seed, std::size_t paths, std::size_t n,
                                      double dt, std::complex<double> beta,
                                      unsigned workers = 1);

}  // namespace wsqrt
