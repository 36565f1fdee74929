#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace mmv {

/// Seedable uniform/normal generator. Each sampler chain owns one instance;
/// there is no global state, so chains with distinct seeds can run
/// concurrently. All draws are derived from the raw 64-bit stream in a fixed
/// way, which makes every consumer byte-reproducible for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform draw on the open interval (0, 1); never returns 0 or 1, so
  /// log(uniform()) is always finite.
  double uniform() {
    return (static_cast<double>(eng_() >> 11) + 0.5) * kInv53;
  }

  /// Standard normal via Box-Muller; consumes exactly two uniforms.
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  /// Unbiased integer draw on [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  /// Fisher-Yates permutation of {0, ..., n-1}.
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(below(static_cast<std::uint64_t>(i) + 1));
      std::swap(p[i], p[j]);
    }
    return p;
  }

 private:
  static constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
  static constexpr double kPi = 3.14159265358979323846;
  std::mt19937_64 eng_;
};

}  // namespace mmv
