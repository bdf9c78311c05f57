#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "offgrid/errors.hpp"

namespace offgrid {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t rotl64(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

/// Deterministic splittable random stream.
///
/// Every stream is identified by a 64-bit derivation key; child(tag) derives
/// an independent stream whose key depends only on (parent key, tag). Monte
/// Carlo code derives one child per trial so results do not depend on
/// execution order or worker count. The generator itself is xoshiro256++
/// seeded from the key via splitmix64.
class RngStream {
 public:
  RngStream() : RngStream(from_seed(0)) {}

  static RngStream from_seed(std::uint64_t seed) {
    return RngStream(detail::mix64(seed + detail::kGolden));
  }

  /// Derives an independent substream. Distinct (key, tag) pairs map to
  /// distinct keys with overwhelming probability; harness code asserts
  /// disjointness of the keys it actually uses.
  RngStream child(std::uint64_t tag) const {
    return RngStream(detail::mix64(key_ + detail::kGolden * (tag + 1)));
  }

  RngStream child(std::uint64_t tag_a, std::uint64_t tag_b) const {
    return child(tag_a).child(tag_b);
  }

  std::uint64_t key() const { return key_; }

  std::uint64_t next_u64() {
    const std::uint64_t result =
        detail::rotl64(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = detail::rotl64(s_[3], 45);
    return result;
  }

  /// Unbiased draw from {0, ..., n-1}.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw InvalidInputError("next_below: n must be positive");
    const std::uint64_t threshold = -n % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % n;
    }
  }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (cosine branch only).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Circular complex normal with unit total variance:
  /// real and imaginary parts independent N(0, 1/2).
  std::complex<double> complex_normal() {
    const double s = std::numbers::sqrt2 / 2.0;
    const double re = normal();
    const double im = normal();
    return {s * re, s * im};
  }

  /// Gamma draw with the given shape and scale (Marsaglia-Tsang).
  double gamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
      throw InvalidInputError("gamma: shape and scale must be positive");
    if (shape < 1.0) {
      // Boost to shape+1 and correct with a uniform power.
      double u = uniform();
      while (u <= 0.0) u = uniform();
      return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x;
      double v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
      if (u > 0.0 &&
          std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
        return d * v * scale;
    }
  }

 private:
  explicit RngStream(std::uint64_t key) : key_(key) {
    std::uint64_t t = key_;
    for (auto& word : s_) {
      t += detail::kGolden;
      word = detail::mix64(t);
    }
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
  }

  std::uint64_t key_;
  std::uint64_t s_[4];
};

/// Unit-mean texture draw: Gamma with shape mu and scale 1/mu.
inline double sample_gamma_texture(RngStream& rng, double shape) {
  if (!(shape > 0.0))
    throw InvalidInputError("sample_gamma_texture: shape must be positive");
  return rng.gamma(shape, 1.0 / shape);
}

}  // namespace offgrid
