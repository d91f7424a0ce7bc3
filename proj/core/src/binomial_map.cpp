#include "wsqrt/binomial_map.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wsqrt {

namespace {

using boost::multiprecision::cpp_int;

// Exact integer-arithmetic threshold; beyond it the map works in the log
// domain, where lgamma precision is ample for every consumer here.
constexpr unsigned kExactLimit = 64;

std::vector<double> pmf_double(unsigned n) {
  std::vector<double> pmf(n + 1);
  if (n <= kExactLimit) {
    const auto exact = binom_pmf(n);
    for (unsigned k = 0; k <= n; ++k) pmf[k] = exact[k].convert_to<double>();
  } else {
    const double log2n = static_cast<double>(n) * std::numbers::ln2;
    for (unsigned k = 0; k <= n; ++k) {
      const double logc = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                          std::lgamma(static_cast<double>(n - k) + 1.0);
      pmf[k] = std::exp(logc - log2n);
    }
  }
  return pmf;
}

}  // namespace

std::vector<Rational> binom_pmf(unsigned n) {
  const cpp_int denom = cpp_int(1) << n;
  std::vector<Rational> pmf(n + 1);
  cpp_int c = 1;  // C(n,0)
  for (unsigned k = 0; k <= n; ++k) {
    pmf[k] = Rational(c, denom);
    if (k < n) c = c * (n - k) / (k + 1);
  }
  return pmf;
}

DiscreteWave discrete_wave(unsigned n, const std::function<double(unsigned)>& theta) {
  DiscreteWave wave;
  wave.n = n;
  wave.values.resize(n + 1);
  wave.thetas.resize(n + 1);
  const auto pmf = pmf_double(n);
  for (unsigned k = 0; k <= n; ++k) {
    const double th = theta ? theta(k) : 0.0;
    wave.thetas[k] = th;
    wave.values[k] = std::sqrt(pmf[k]) * std::complex<double>{std::cos(th), std::sin(th)};
  }
  return wave;
}

std::complex<double> inner(const DiscreteWave& a, const DiscreteWave& b) {
  if (a.n != b.n) throw std::invalid_argument("inner: size mismatch");
  std::complex<double> acc;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    acc += std::conj(a.values[k]) * b.values[k];
  }
  return acc;
}

double gaussian_local_limit_error(unsigned n) {
  if (n == 0) throw std::invalid_argument("gaussian_local_limit_error: n must be >= 1");
  const auto pmf = pmf_double(n);
  const double mu = 0.5 * static_cast<double>(n);
  const double var = 0.25 * static_cast<double>(n);
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * var);
  double sup = 0.0;
  for (unsigned k = 0; k <= n; ++k) {
    const double d = static_cast<double>(k) - mu;
    const double g = norm * std::exp(-d * d / (2.0 * var));
    sup = std::max(sup, std::abs(pmf[k] - g));
  }
  return sup;
}

}  // namespace wsqrt
