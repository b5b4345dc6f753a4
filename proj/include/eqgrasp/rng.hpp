#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace eqg {

// Deterministic RNG with explicit distribution code so that results do not
// depend on the standard library's unspecified distribution algorithms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). Rejection-free modulo bias is irrelevant for
  // n << 2^64 but we avoid it anyway.
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  int uniform_int(int lo, int hi_inclusive) {
    return lo + static_cast<int>(uniform_index(
                    static_cast<std::uint64_t>(hi_inclusive - lo + 1)));
  }

  // Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return mag * std::cos(2.0 * M_PI * u2);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Derive an independent stream for a named sub-component. Streams with
  // distinct ids never share state with each other or with the parent.
  Rng split(std::uint64_t stream_id) const {
    return Rng(seed_ ^ (0x9e3779b97f4a7c15ull * (stream_id + 1)));
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace eqg
