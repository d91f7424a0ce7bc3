#include "wsqrt/pde.hpp"

#include "wsqrt/stats.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wsqrt {

namespace {

using cplx = std::complex<double>;

constexpr cplx kPotentialCoupling{0.25, -0.25};  // (1-i)/4

// In-place Thomas solve of a tridiagonal system; sub/diag/sup are the three
// bands, rhs becomes the solution. The systems produced here are strictly
// diagonally dominant, so no pivoting.
void solve_tridiagonal(std::vector<cplx>& sub, std::vector<cplx>& diag,
                       std::vector<cplx>& sup, std::vector<cplx>& rhs) {
  const std::size_t n = diag.size();
  for (std::size_t j = 1; j < n; ++j) {
    const cplx w = sub[j] / diag[j - 1];
    diag[j] -= w * sup[j - 1];
    rhs[j] -= w * rhs[j - 1];
  }
  rhs[n - 1] /= diag[n - 1];
  for (std::size_t j = n - 1; j-- > 0;) {
    rhs[j] = (rhs[j] - sup[j] * rhs[j + 1]) / diag[j];
  }
}

}  // namespace

std::size_t GridSpec::points() const {
  if (!(dx > 0.0)) throw std::invalid_argument("GridSpec: dx must be > 0");
  const double span = x_max - x_min;
  if (!(span > 0.0)) throw std::invalid_argument("GridSpec: x_max must exceed x_min");
  const double steps = span / dx;
  const auto n = static_cast<std::size_t>(std::llround(steps));
  if (n < 2 || std::abs(steps - static_cast<double>(n)) > 1e-9) {
    throw std::invalid_argument("GridSpec: (x_max - x_min) must be a multiple of dx, >= 2 cells");
  }
  return n + 1;
}

EvolutionCoefficients free_coefficients(std::complex<double> beta) {
  EvolutionCoefficients c;
  c.advection = cplx{-0.25, -0.25} + beta * cplx{0.5, -0.5};
  c.diffusion = cplx{0.0, -0.25};
  return c;
}

EvolutionCoefficients interacting_coefficients(std::function<double(double, double)> potential) {
  EvolutionCoefficients c;
  c.advection = cplx{-0.25, -0.25};
  c.diffusion = cplx{0.0, -0.25};
  c.potential = std::move(potential);
  return c;
}

std::complex<double> schrodinger_beta() { return {0.0, 0.5}; }

WaveGrid gaussian_packet(double delta_x, const GridSpec& grid) {
  if (!(delta_x > 0.0)) throw std::invalid_argument("gaussian_packet: delta_x must be > 0");
  const std::size_t n = grid.points();
  WaveGrid psi;
  psi.x_min = grid.x_min;
  psi.dx = grid.dx;
  psi.time = 0.0;
  psi.values.resize(n);
  const double norm = std::pow(std::numbers::pi * delta_x * delta_x, -0.25);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = psi.x(j);
    psi.values[j] = norm * std::exp(-x * x / (2.0 * delta_x * delta_x));
  }
  const double edge = std::max(std::abs(psi.values.front()), std::abs(psi.values.back()));
  if (edge >= 1e-12) {
    throw std::invalid_argument("gaussian_packet: grid too narrow, boundary amplitude " +
                                std::to_string(edge));
  }
  return psi;
}

WaveGrid evolve(const WaveGrid& psi, const EvolutionCoefficients& c, double dt,
                std::size_t steps) {
  if (!(dt > 0.0)) throw std::invalid_argument("evolve: dt must be > 0");
  const std::size_t n = psi.size();
  if (n < 3) throw std::invalid_argument("evolve: need at least 3 grid points");

  WaveGrid out = psi;
  const double dx = psi.dx;
  const cplx adv = c.advection / (2.0 * dx);
  const cplx dif = c.diffusion / (dx * dx);
  const bool has_potential = static_cast<bool>(c.potential);
  const cplx vcoef = kPotentialCoupling / (2.0 * dx);

  const std::size_t m = n - 2;  // interior unknowns
  std::vector<cplx> sub(m), diag(m), sup(m), rhs(m);
  std::vector<double> v_now(n, 0.0), v_next(n, 0.0);

  for (std::size_t step = 0; step < steps; ++step) {
    const double t_now = out.time;
    const double t_next = out.time + dt;
    if (has_potential) {
      for (std::size_t j = 0; j < n; ++j) {
        v_now[j] = c.potential(out.x(j), t_now);
        v_next[j] = c.potential(out.x(j), t_next);
      }
    }
    // Row j couples psi_{j-1}, psi_j, psi_{j+1} through
    //   L psi|_j = adv·(psi_{j+1}-psi_{j-1}) + vcoef·(V_{j+1}psi_{j+1}-V_{j-1}psi_{j-1})
    //            + dif·(psi_{j+1}-2psi_j+psi_{j-1}).
    const double half = 0.5 * dt;
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t j = k + 1;
      cplx lower_next = -adv + dif;
      cplx upper_next = adv + dif;
      cplx lower_now = -adv + dif;
      cplx upper_now = adv + dif;
      if (has_potential) {
        lower_next += -vcoef * v_next[j - 1];
        upper_next += vcoef * v_next[j + 1];
        lower_now += -vcoef * v_now[j - 1];
        upper_now += vcoef * v_now[j + 1];
      }
      sub[k] = -half * lower_next;
      diag[k] = 1.0 + half * 2.0 * dif;
      sup[k] = -half * upper_next;
      const cplx left = k == 0 ? cplx{} : out.values[j - 1];
      const cplx right = k == m - 1 ? cplx{} : out.values[j + 1];
      rhs[k] = out.values[j] +
               half * (lower_now * left + (-2.0 * dif) * out.values[j] + upper_now * right);
    }
    solve_tridiagonal(sub, diag, sup, rhs);
    for (std::size_t k = 0; k < m; ++k) out.values[k + 1] = rhs[k];
    out.values.front() = cplx{};
    out.values.back() = cplx{};
    out.time = t_next;

    double probe = 0.0;
    for (const cplx& z : out.values) probe += std::norm(z);
    if (!std::isfinite(probe)) {
      throw std::runtime_error("evolve: nonfinite values at step " + std::to_string(step));
    }
  }
  return out;
}

WaveGrid analytic_free(double delta_x, double t, const GridSpec& grid) {
  if (!(delta_x > 0.0)) throw std::invalid_argument("analytic_free: delta_x must be > 0");
  const std::size_t n = grid.points();
  WaveGrid psi;
  psi.x_min = grid.x_min;
  psi.dx = grid.dx;
  psi.time = t;
  psi.values.resize(n);
  const double a = delta_x * delta_x;
  const cplx a_t{a, -0.5 * t};
  const cplx prefactor =
      std::pow(std::numbers::pi * a, -0.25) * std::sqrt(cplx{a, 0.0} / a_t);
  const cplx inv_width = 1.0 / (2.0 * a_t);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = psi.x(j);
    psi.values[j] = prefactor * std::exp(-x * x * inv_width);
  }
  return psi;
}

Moments moments(const WaveGrid& psi) {
  CompensatedSum mass, first, second;
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const double w = std::norm(psi.values[j]);
    mass.add(w);
    first.add(w * psi.x(j));
  }
  const double norm = psi.dx * mass.value();
  if (!(norm > 0.0)) throw std::invalid_argument("moments: zero norm");
  const double mean = psi.dx * first.value() / norm;
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const double d = psi.x(j) - mean;
    second.add(std::norm(psi.values[j]) * d * d);
  }
  return {norm, mean, psi.dx * second.value() / norm};
}

}  // namespace wsqrt
