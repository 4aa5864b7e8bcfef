#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hawkesflow {

// Deterministic draws on top of mt19937_64. The standard distribution
// classes are implementation-defined, so the mappings from raw 64-bit
// output to doubles live here; artifacts stay reproducible across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double exponential(double rate) {
    return -std::log1p(-uniform01()) / rate;
  }

  double normal() {
    double u1 = 1.0 - uniform01();  // (0, 1]
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925 * u2);
  }

  double log_normal(double mu, double sigma) {
    return std::exp(mu + sigma * normal());
  }

 private:
  std::mt19937_64 gen_;
};

// splitmix64 finalizer; used to fan one root seed out to independent
// per-task streams.
inline std::uint64_t mix_bits(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t root, std::uint64_t a,
                              std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t h = mix_bits(root ^ 0x6a5d39eae116586dULL);
  h = mix_bits(h ^ a);
  h = mix_bits(h ^ b);
  h = mix_bits(h ^ c);
  return h;
}

}  // namespace hawkesflow
