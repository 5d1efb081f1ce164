#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace qsa {

// Deterministic random source. The engine is std::mt19937_64 (algorithm
// pinned by the standard); all variate transforms are implemented here so
// that streams are bit-identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  // Seed derivation for parallel tasks. derive(seed, i) depends only on its
  // arguments, so results are independent of worker count and scheduling.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    return mix(seed + 0x9E3779B97F4A7C15ull * (index + 1));
  }
  Rng child(std::uint64_t index) const { return Rng(derive(seed_, index)); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  bool bernoulli(double p) { return uniform01() < p; }

  double exponential(double rate) {
    // rate <= 0 means "never"; callers use that for disabled processes.
    if (rate <= 0.0) return std::numeric_limits<double>::infinity();
    double u;
    do { u = uniform01(); } while (u <= 0.0);
    return -std::log(u) / rate;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1, u2;
    do { u1 = uniform01(); } while (u1 <= 0.0);
    u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(two_pi_ * u2);
    have_spare_ = true;
    return r * std::cos(two_pi_ * u2);
  }

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  // Knuth multiplication method; fine for the photon-count means used here.
  int poisson(double mean) {
    if (mean <= 0.0) return 0;
    const double limit = std::exp(-mean);
    int k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform01();
    } while (p > limit);
    return k - 1;
  }

 private:
  // splitmix64 finalizer; decorrelates nearby seeds.
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static constexpr double two_pi_ = 6.283185307179586476925286766559;

  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace qsa
