#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wsqrt/philox.hpp"

#include <cmath>
#include <vector>

using namespace wsqrt;

TEST_CASE("philox4x32-10 known-answer vectors") {
  // Reference vectors from the original Random123 distribution.
  {
    const auto out = Philox4x32::block({0, 0, 0, 0}, {0, 0});
    CHECK(out[0] == 0x6627e8d5u);
    CHECK(out[1] == 0xe169c58du);
    CHECK(out[2] == 0xbc57ac4cu);
    CHECK(out[3] == 0x9b00dbd8u);
  }
  {
    const auto out = Philox4x32::block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                       {0xffffffffu, 0xffffffffu});
    CHECK(out[0] == 0x408f276du);
    CHECK(out[1] == 0x41c83b0eu);
    CHECK(out[2] == 0xa20bc7c6u);
    CHECK(out[3] == 0x6d5451fdu);
  }
  {
    const auto out = Philox4x32::block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                                       {0xa4093822u, 0x299f31d0u});
    CHECK(out[0] == 0xd16cfe09u);
    CHECK(out[1] == 0x94fdccebu);
    CHECK(out[2] == 0x5001e420u);
    CHECK(out[3] == 0x24126ea1u);
  }
}

TEST_CASE("streams are reproducible and keyed by path index") {
  NormalStream a(123, 0), b(123, 0), c(123, 1);
  bool any_differs = false;
  for (int i = 0; i < 64; ++i) {
    const double x = a.next_normal();
    CHECK(x == b.next_normal());
    if (x != c.next_normal()) any_differs = true;
  }
  CHECK(any_differs);
}

TEST_CASE("uniforms stay inside their half-open ranges") {
  NormalStream s(99, 7);
  for (int i = 0; i < 20000; ++i) {
    const double u = s.next_uniform();
    CHECK(u >= 0.0);
    CHECK(u <= 1.0);
  }
}

TEST_CASE("normals have the right first moments") {
  NormalStream s(2024, 0);
  const int n = 200000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = s.next_normal();
    sum += z;
    sumsq += z * z;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::abs(var - 1.0) < 4.0 * std::sqrt(2.0 / n));
}
