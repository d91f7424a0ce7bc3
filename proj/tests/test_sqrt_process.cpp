#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wsqrt/sqrt_process.hpp"
#include "wsqrt/stats.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

using namespace wsqrt;
using cplx = std::complex<double>;

namespace {
constexpr std::uint64_t kSeed = 555888;

WienerPath injected(std::vector<double> increments, double dt) {
  WienerPath p;
  p.dt = dt;
  p.increments = std::move(increments);
  return p;
}
}  // namespace

TEST_CASE("phase factor takes the values 1 and i") {
  IncrementDecomposition d;
  d.signs = {1.0, -1.0, 1.0};
  d.magnitudes = {0.1, 0.2, 0.3};
  const PhasePath p = phase_path(d);
  CHECK(p.phases[0] == cplx{1.0, 0.0});
  CHECK(p.phases[1] == cplx{0.0, 1.0});
  CHECK(p.phases[2] == cplx{1.0, 0.0});
}

TEST_CASE("phase squared collapses to the sign sequence, exactly") {
  const WienerPath w = generate_wiener(5000, 0.01, kSeed, 0);
  const IncrementDecomposition d = decompose(w);
  const PhasePath p = phase_path(d);
  for (std::size_t k = 0; k < p.phases.size(); ++k) {
    CHECK(p.phases[k] * p.phases[k] == cplx{d.signs[k], 0.0});
  }
}

TEST_CASE("phase moments approach (1+i)/2 and -i/2") {
  const std::size_t n = 1000000;
  const WienerPath w = generate_wiener(n, 1.0 / n, kSeed, 1);
  const PhaseMoments m = phase_moments(phase_path(decompose(w)));
  const double root_n = std::sqrt(static_cast<double>(n));
  CHECK(std::abs(m.mean - cplx{0.5, 0.5}) < 4.0 * (std::sqrt(2.0) / 2.0) / root_n);
  CHECK(std::abs(m.variance - cplx{0.0, -0.5}) < 8.0 / static_cast<double>(n));
}

TEST_CASE("constant-sign phases have mean 1 and variance 0") {
  IncrementDecomposition d;
  d.signs.assign(100, 1.0);
  d.magnitudes.assign(100, 0.5);
  const PhaseMoments m = phase_moments(phase_path(d));
  CHECK(m.mean == cplx{1.0, 0.0});
  CHECK(m.variance == cplx{0.0, 0.0});
}

TEST_CASE("empty phase paths are rejected") {
  CHECK_THROWS_AS(phase_moments(PhasePath{}), std::invalid_argument);
}

TEST_CASE("free sampler reproduces the bracket formula") {
  {
    const auto x = sample_free(injected({0.2}, 0.01), 0.0);
    CHECK(std::abs(x.increments[0] - cplx{0.69, 0.0}) < 1e-15);
  }
  {
    const auto x = sample_free(injected({-0.2}, 0.01), 0.0);
    CHECK(std::abs(x.increments[0] - cplx{0.0, 0.69}) < 1e-15);
  }
  {
    // dt below the ulp of the bracket: the increment is exactly 1/2.
    const auto x = sample_free(injected({0.0}, 1e-300), 0.0);
    CHECK(x.increments[0] == cplx{0.5, 0.0});
  }
}

TEST_CASE("constant potential reduces to the free sampler bit for bit") {
  const WienerPath w = generate_wiener(2000, 0.001, kSeed, 2);
  for (const cplx beta : {cplx{0.0, 0.0}, cplx{0.7, 0.0}, cplx{0.0, 0.5}}) {
    const auto free_path = sample_free(w, beta);
    const auto pot_path = sample_potential(w, [beta](cplx, double) { return beta; });
    CHECK(free_path.increments == pot_path.increments);
  }
}

TEST_CASE("potential is evaluated at the pre-step position") {
  // V(x,t) = x with X0 = 0: the first bracket sees V = 0.
  const auto x = sample_potential(injected({0.1}, 0.01), [](cplx x, double) { return x; });
  const auto x_free = sample_free(injected({0.1}, 0.01), 0.0);
  CHECK(x.increments[0] == x_free.increments[0]);

  // Two steps: the second bracket must see X1 = dX0.
  const auto y = sample_potential(injected({0.1, 0.1}, 0.01), [](cplx x, double) { return x; });
  const cplx expected_second = (0.5 + 0.1 + (-1.0 + y.increments[0] * 1.0) * 0.01) * cplx{1.0, 0.0};
  CHECK(y.increments[1] == expected_second);
}

TEST_CASE("running positions accumulate from x0") {
  const WienerPath w = generate_wiener(10, 0.01, kSeed, 3);
  const auto x = sample_free(w, 0.0, cplx{2.0, 0.0});
  const auto pos = x.cumulative();
  CHECK(pos.size() == 11);
  CHECK(pos[0] == cplx{2.0, 0.0});
  cplx acc{2.0, 0.0};
  for (std::size_t k = 0; k < x.size(); ++k) acc += x.increments[k];
  CHECK(std::abs(pos.back() - acc) < 1e-14);
}

TEST_CASE("single deterministic step has closed-form residual") {
  const WienerPath w = injected({0.0}, 0.01);
  const auto x = sample_free(w, 0.0);
  const cplx r = square_variation_residual(x, w, 0.0);
  // (1/2 - dt)^2 - 1/4 = -dt + dt^2
  CHECK(std::abs(r - cplx{-0.01 + 0.0001, 0.0}) < 1e-15);
}

TEST_CASE("length mismatch is rejected") {
  const WienerPath w = generate_wiener(10, 0.01, kSeed, 4);
  const auto x = sample_free(generate_wiener(9, 0.01, kSeed, 4), 0.0);
  CHECK_THROWS_AS(square_variation_residual(x, w, 0.0), std::invalid_argument);
}

TEST_CASE("squared increments recover the Wiener increments on average") {
  const ResidualStats s = residual_ensemble_stats(kSeed, 2000, 1000, 1e-3, 0.0, 4);
  CHECK(std::abs(s.mean) < 4.0 * s.standard_error);
}

TEST_CASE("residual rms halves when n quadruples") {
  const ResidualStats coarse = residual_ensemble_stats(kSeed, 2000, 1000, 1e-3, 0.0, 4);
  const ResidualStats fine = residual_ensemble_stats(kSeed, 2000, 4000, 2.5e-4, 0.0, 4);
  const double ratio = fine.rms / coarse.rms;
  CHECK(ratio > 0.35);
  CHECK(ratio < 0.65);
}

TEST_CASE("residual reduction is worker-count independent") {
  const ResidualStats w1 = residual_ensemble_stats(kSeed, 300, 200, 0.005, 0.0, 1);
  const ResidualStats w8 = residual_ensemble_stats(kSeed, 300, 200, 0.005, 0.0, 8);
  CHECK(w1.mean == w8.mean);
  CHECK(w1.rms == w8.rms);
}
