#pragma once

#include "wsqrt/exact.hpp"
#include "wsqrt/paths.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace wsqrt {

/// The only two divergent series the regularization scheme assigns values to.
enum class DivergentSeries {
  AllOnes,           // 1 + 1 + 1 + ...  -> zeta(0) = -1/2
  AlternatingUnits,  // -1 + 1 - 1 + ... -> -1/2 (Abel)
};

enum class RegularizationMethod { Zeta, Abel, None };

/// Exact assigned value of a licensed divergent series. Anything outside the
/// two supported patterns throws std::invalid_argument.
Rational assign_divergent(DivergentSeries kind);

struct RegularizedSum {
  std::size_t n = 0;
  double raw_value = 0.0;
  std::optional<double> regularized_value;
  RegularizationMethod method = RegularizationMethod::None;
};

/// Mean-square of the Riemann sum S_n = Sum |dW_i| on the grid t_i = i/n over
/// [0,1]: raw value (2/pi)·(1/n)·n², i.e. (2/pi)·n, which diverges with n.
/// With regularize = true the inner sum is substituted by its zeta assignment
/// -1/2, giving (2/pi)·(1/n)·(1/4). The substitution is symbolic (exact
/// rational square), never a numeric resummation.
RegularizedSum abs_integral_mean_square(std::size_t n, bool regularize);

struct EnsembleStats {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t paths = 0;
};

/// Ensemble mean/standard error of S_n = Sum_i sign(dW_i) per path.
/// Expectation zero; all paths must share n. Throws std::invalid_argument on
/// an empty ensemble or mismatched lengths.
EnsembleStats sign_integral_stats(std::span<const WienerPath> ensemble);

/// Same statistic over the canonical keyed ensemble (path_index = 0..paths-1)
/// without materializing it; reduction is in path-index order, so the result
/// is independent of the worker count.
EnsembleStats sign_integral_stats_seeded(std::uint64_t seed, std::size_t paths, std::size_t n,
                                         double dt, unsigned workers = 1);

/// Monte Carlo <S_n²> for S_n = Sum |dW_i|, the empirical side of the
/// divergence check for the unregularized formula.
EnsembleStats abs_sum_mean_square_mc(std::span<const WienerPath> ensemble);

EnsembleStats abs_sum_mean_square_mc_seeded(std::uint64_t seed, std::size_t paths, std::size_t n,
                                            double dt, unsigned workers = 1);

}  // namespace wsqrt
