#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wsqrt/binomial_map.hpp"
#include "wsqrt/philox.hpp"
#include "wsqrt/stats.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace wsqrt;
using cplx = std::complex<double>;

TEST_CASE("pmf values are exact rationals summing to one") {
  const auto p2 = binom_pmf(2);
  CHECK(p2 == std::vector<Rational>{Rational(1, 4), Rational(1, 2), Rational(1, 4)});
  CHECK(binom_pmf(4)[2] == Rational(6, 16));

  for (unsigned n = 0; n <= 64; ++n) {
    const auto pmf = binom_pmf(n);
    Rational total = 0;
    for (const auto& p : pmf) total += p;
    CHECK(total == Rational(1));
  }
}

TEST_CASE("the wave is the square root of the pmf") {
  const DiscreteWave w2 = discrete_wave(2);
  CHECK(std::abs(w2.values[0] - cplx{0.5, 0.0}) < 1e-16);
  CHECK(std::abs(w2.values[1] - cplx{std::numbers::sqrt2 / 2.0, 0.0}) < 1e-16);
  CHECK(std::abs(w2.values[2] - cplx{0.5, 0.0}) < 1e-16);

  const DiscreteWave w0 = discrete_wave(0);
  CHECK(w0.values.size() == 1);
  CHECK(std::abs(w0.values[0] - cplx{1.0, 0.0}) < 1e-16);

  for (unsigned n = 0; n <= 64; ++n) {
    const auto pmf = binom_pmf(n);
    const DiscreteWave w = discrete_wave(n);
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(std::abs(std::norm(w.values[k]) - pmf[k].convert_to<double>()) < 1e-15);
    }
  }
}

TEST_CASE("phases never change the squared moduli") {
  NormalStream rng(904, 0);
  for (const unsigned n : {1u, 8u, 33u, 64u}) {
    std::vector<double> theta(n + 1);
    for (auto& t : theta) t = 20.0 * rng.next_uniform() - 10.0;
    const DiscreteWave flat = discrete_wave(n);
    const DiscreteWave twisted = discrete_wave(n, [&](unsigned k) { return theta[k]; });
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(std::abs(std::abs(twisted.values[k]) - std::abs(flat.values[k])) < 1e-15);
    }
    const cplx norm = inner(twisted, twisted);
    CHECK(std::abs(norm - cplx{1.0, 0.0}) < 1e-12);
  }
}

TEST_CASE("scalar product is sesquilinear and normalized") {
  for (const unsigned n : {0u, 2u, 16u, 64u}) {
    const DiscreteWave w = discrete_wave(n);
    const cplx self = inner(w, w);
    CHECK(std::abs(self - cplx{1.0, 0.0}) < 1e-12);
  }

  const DiscreteWave a = discrete_wave(8, [](unsigned k) { return 0.3 * k; });
  const DiscreteWave b = discrete_wave(8, [](unsigned k) { return -0.1 * k * k; });
  const cplx ab = inner(a, b);
  const cplx ba = inner(b, a);
  CHECK(std::abs(ab - std::conj(ba)) < 1e-15);

  CHECK_THROWS_AS(inner(discrete_wave(3), discrete_wave(4)), std::invalid_argument);
}

TEST_CASE("de Moivre-Laplace error, frozen oracle ladder") {
  // Values computed with exact integer pmfs and a 60-digit density oracle.
  const std::vector<std::pair<unsigned, double>> frozen = {
      {1u, 1.60585509617133006e-02},
      {16u, 3.09052496634133885e-03},
      {64u, 3.88816352391272953e-04},
      {256u, 4.86751140389335061e-05},
      {1024u, 6.08663210999865925e-06},
  };
  for (const auto& [n, expected] : frozen) {
    CHECK(gaussian_local_limit_error(n) == doctest::Approx(expected).epsilon(1e-9));
  }

  // n = 1 in closed form: |1/2 - g(0)|, g the Normal(1/2, 1/4) density at 0.
  const double g0 = std::sqrt(2.0 / std::numbers::pi) * std::exp(-0.5);
  CHECK(gaussian_local_limit_error(1) == doctest::Approx(0.5 - g0).epsilon(1e-12));

  CHECK(gaussian_local_limit_error(64) < gaussian_local_limit_error(16));
  CHECK_THROWS_AS(gaussian_local_limit_error(0), std::invalid_argument);
}

TEST_CASE("local limit error decays at least as fast as 1/n") {
  std::vector<double> ns = {16, 64, 256, 1024};
  std::vector<double> errs;
  double prev = 1.0;
  for (const double n : ns) {
    const double e = gaussian_local_limit_error(static_cast<unsigned>(n));
    CHECK(e < prev);
    prev = e;
    errs.push_back(e);
  }
  CHECK(fit_loglog_slope(ns, errs) < -0.9);
}
