#include "wsqrt/sqrt_process.hpp"

#include "wsqrt/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace wsqrt {

namespace {

constexpr std::complex<double> kHalfPlus{0.5, 0.5};    // (1+i)/2
constexpr std::complex<double> kHalfMinus{0.5, -0.5};  // (1-i)/2

inline std::complex<double> phase_of_sign(double sign) {
  return kHalfMinus * sign + kHalfPlus;
}

// One code path shared by the free and interacting samplers so that a
// constant potential reproduces sample_free bit for bit.
template <typename DriftFn>
ComplexProcessPath sample_impl(const WienerPath& w, DriftFn&& drift_at,
                               std::complex<double> x0) {
  ComplexProcessPath out;
  out.t0 = w.t0;
  out.dt = w.dt;
  out.x0 = x0;
  out.increments.resize(w.size());
  std::complex<double> x = x0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double dw = w.increments[k];
    const double sign = dw < 0.0 ? -1.0 : 1.0;
    const double mag = std::abs(dw);
    const double t = w.t0 + static_cast<double>(k) * w.dt;
    const std::complex<double> b = drift_at(x, t);
    const std::complex<double> bracket =
        0.5 + mag + (-1.0 + b * sign) * w.dt;
    const std::complex<double> dx = bracket * phase_of_sign(sign);
    out.increments[k] = dx;
    x += dx;
  }
  return out;
}

}  // namespace

PhasePath phase_path(const IncrementDecomposition& d) {
  PhasePath p;
  p.phases.resize(d.signs.size());
  for (std::size_t k = 0; k < d.signs.size(); ++k) {
    p.phases[k] = phase_of_sign(d.signs[k]);
  }
  return p;
}

PhaseMoments phase_moments(const PhasePath& p) {
  if (p.phases.empty()) throw std::invalid_argument("phase_moments: empty path");
  const double n = static_cast<double>(p.phases.size());
  CompensatedSum re, im;
  for (const auto& phi : p.phases) {
    re.add(phi.real());
    im.add(phi.imag());
  }
  const std::complex<double> mean{re.value() / n, im.value() / n};
  CompensatedSum vre, vim;
  for (const auto& phi : p.phases) {
    const std::complex<double> d = phi - mean;
    const std::complex<double> d2 = d * d;  // unconjugated square
    vre.add(d2.real());
    vim.add(d2.imag());
  }
  return {mean, {vre.value() / n, vim.value() / n}};
}

std::vector<std::complex<double>> ComplexProcessPath::cumulative() const {
  std::vector<std::complex<double>> out(increments.size() + 1, x0);
  CompensatedSum re, im;
  for (std::size_t k = 0; k < increments.size(); ++k) {
    re.add(increments[k].real());
    im.add(increments[k].imag());
    out[k + 1] = x0 + std::complex<double>{re.value(), im.value()};
  }
  return out;
}

ComplexProcessPath sample_free(const WienerPath& w, std::complex<double> beta,
                               std::complex<double> x0) {
  ComplexProcessPath out =
      sample_impl(w, [beta](std::complex<double>, double) { return beta; }, x0);
  out.beta = beta;
  out.kind = DriftKind::Free;
  return out;
}

ComplexProcessPath sample_potential(const WienerPath& w, const Potential& potential,
                                    std::complex<double> x0) {
  ComplexProcessPath out =
      sample_impl(w, [&potential](std::complex<double> x, double t) { return potential(x, t); },
                  x0);
  out.kind = DriftKind::Potential;
  return out;
}

std::complex<double> square_variation_residual(const ComplexProcessPath& x, const WienerPath& w,
                                               std::complex<double> beta) {
  if (x.size() != w.size()) {
    throw std::invalid_argument("square_variation_residual: path length mismatch");
  }
  CompensatedSum re, im, signs;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const std::complex<double> sq = x.increments[k] * x.increments[k];
    re.add(sq.real());
    im.add(sq.imag());
    signs.add(w.increments[k] < 0.0 ? -1.0 : 1.0);
  }
  const std::complex<double> squared_sum{re.value(), im.value()};
  const double elapsed = w.duration();
  const std::complex<double> target =
      0.25 * signs.value() + w.terminal_value() + beta * elapsed;
  return squared_sum - target;
}

ResidualStats residual_ensemble_stats(std::uint64_t seed, std::size_t paths, std::size_t n,
                                      double dt, std::complex<double> beta, unsigned workers) {
  if (paths == 0) throw std::invalid_argument("residual_ensemble_stats: empty ensemble");
  std::vector<std::complex<double>> residuals(paths);
  parallel_for_index(paths, workers, [&](std::size_t p) {
    const WienerPath w = generate_wiener(n, dt, seed, p);
    const ComplexProcessPath x = sample_free(w, beta);
    residuals[p] = square_variation_residual(x, w, beta);
  });
  const ComplexSampleStats s = complex_sample_stats(residuals);
  CompensatedSum sq;
  for (const auto& r : residuals) sq.add(std::norm(r));
  ResidualStats out;
  out.mean = s.mean;
  out.standard_error = s.standard_error;
  out.rms = std::sqrt(sq.value() / static_cast<double>(paths));
  out.paths = paths;
  return out;
}

}  // namespace wsqrt
