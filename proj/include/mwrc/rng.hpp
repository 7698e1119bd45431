#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "mwrc/errors.hpp"

namespace mwrc {

// Hand-rolled generator and variate transforms so that simulation output is
// reproducible bit for bit across compilers and standard libraries (the
// stdlib distributions are implementation-defined).

[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~0ull; }
  constexpr result_type operator()() noexcept {
    return mix64(state_ += 0x9e3779b97f4a7c15ull);
  }

 private:
  std::uint64_t state_;
};

// Independent substream for (seed, a, b); lets each Monte Carlo trial own a
// generator derived from its indices alone, so results do not depend on
// execution order or thread count.
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                                  std::uint64_t a,
                                                  std::uint64_t b) noexcept {
  std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ull);
  h = mix64(h ^ (a + 0x9e3779b97f4a7c15ull));
  h = mix64(h ^ (b + 0x94d049bb133111ebull));
  return h;
}

// Uniform in (0, 1]; never zero, so it is safe inside a logarithm.
[[nodiscard]] inline double uniform_unit(SplitMix64& rng) noexcept {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

// Uniform integer in [0, n) by masked rejection; unbiased for any n.
[[nodiscard]] inline std::uint64_t uniform_below(SplitMix64& rng,
                                                 std::uint64_t n) {
  if (n == 0) throw DomainError("uniform draw over an empty range");
  std::uint64_t mask = n - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  std::uint64_t v = rng() & mask;
  while (v >= n) v = rng() & mask;
  return v;
}

struct GaussianPair {
  double first = 0.0;
  double second = 0.0;
};

// Box-Muller: two independent standard normals from two uniforms.
[[nodiscard]] inline GaussianPair gaussian_pair(SplitMix64& rng) noexcept {
  const double u1 = uniform_unit(rng);
  const double u2 = uniform_unit(rng);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace mwrc
