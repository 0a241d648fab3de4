#ifndef HVBO_RNG_HPP
#define HVBO_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace hvbo {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic random source. The engine is mt19937_64 (fully specified by
/// the standard); all distributions are implemented here rather than taken
/// from <random> so that streams are reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1]; never returns 0 (safe under log()).
  double u01_open() { return 1.0 - u01(); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  /// Standard normal via Box-Muller; one spare value is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u = u01_open();
    const double v = u01();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double a = 6.283185307179586476925286766559 * v;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double mu, double sigma) { return mu + sigma * normal(); }

  /// Uniform integer in [0, n) by rejection.
  std::uint64_t uniform_int(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[uniform_int(i)]);
    }
  }

  /// Independent substream; splitmix64 decorrelates (seed, stream) pairs.
  [[nodiscard]] Rng spawn(std::uint64_t stream) const {
    std::uint64_t s = seed_base_ ^ (0x61c8864680b583ebULL * (stream + 1));
    return Rng(splitmix64(s));
  }

 private:
  std::uint64_t mix(std::uint64_t seed) {
    seed_base_ = seed;
    std::uint64_t s = seed;
    return splitmix64(s);
  }

  std::uint64_t seed_base_ = 0;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace hvbo

#endif  // HVBO_RNG_HPP
