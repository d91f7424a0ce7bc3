#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace wsqrt {

/// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw 2011).
/// A pure function of (counter, key); every 128-bit block is independently
/// addressable, which is what makes per-path substreams reproducible no
/// matter how many workers pull from the ensemble.
struct Philox4x32 {
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static constexpr std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                                      std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      if (round != 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
             static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
             static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }
};

/// Keyed substream of standard normals: key = seed, counter = (block, path).
/// Each 128-bit Philox block yields one Box-Muller pair, so draw i of path p
/// under seed s is a pure function of (s, p, i).
class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t path_index)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        path_lo_(static_cast<std::uint32_t>(path_index)),
        path_hi_(static_cast<std::uint32_t>(path_index >> 32)) {}

  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const auto [u0, u1] = next_uniform_pair();
    // u0 in (0,1] keeps the log finite; u1 in [0,1).
    const double r = std::sqrt(-2.0 * std::log(u0));
    const double angle = 2.0 * std::numbers::pi * u1;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
  }

  double next_uniform() {
    if (have_uniform_) {
      have_uniform_ = false;
      return uniform_spare_;
    }
    const auto [u0, u1] = next_uniform_pair();
    uniform_spare_ = u1;
    have_uniform_ = true;
    return u0;
  }

 private:
  std::pair<double, double> next_uniform_pair() {
    const auto out = Philox4x32::block(
        {static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
         path_lo_, path_hi_},
        key_);
    ++block_;
    const auto hi = (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
    const auto lo = (static_cast<std::uint64_t>(out[2]) << 32) | out[3];
    // 53-bit mantissas; first component shifted into (0,1] for Box-Muller.
    const double u0 = (static_cast<double>(hi >> 11) + 1.0) * 0x1.0p-53;
    const double u1 = static_cast<double>(lo >> 11) * 0x1.0p-53;
    return {u0, u1};
  }

  std::array<std::uint32_t, 2> key_;
  std::uint32_t path_lo_;
  std::uint32_t path_hi_;
  std::uint64_t block_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
  double uniform_spare_ = 0.0;
  bool have_uniform_ = false;
};

}  // namespace wsqrt
