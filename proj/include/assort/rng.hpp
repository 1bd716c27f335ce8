#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace assort {

// SplitMix64 (Steele, Lea & Flood, 2014): one 64-bit word of state, a fixed
// odd increment, and an avalanching finalizer. Any 64-bit value names an
// independent stream, so per-instance and per-sample substreams can be
// derived from counters and results reproduce bit-for-bit across platforms
// and worker counts.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1); safe as a log or log-log argument.
  double uniform_open() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform on (0, hi].
  double uniform_open_closed(double hi) { return hi * (1.0 - uniform01()); }

  // Uniform integer in [0, bound). Modulo bias is negligible for the tiny
  // bounds used here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Folds several words into one stream seed by chaining the SplitMix64
// output function over the parts.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  SplitMix64 rng(0x8f1bbcdc4f022c7dull);
  std::uint64_t h = rng.next();
  for (std::uint64_t p : parts) {
    SplitMix64 step(h ^ p);
    h = step.next();
  }
  return h;
}

inline constexpr double kEulerGamma = 0.57721566490153286;

// Gumbel noise with mean zero and variance pi^2/6: scale 1, location
// -gamma, drawn by inverting the CDF.
inline double gumbel_mean_zero(SplitMix64& rng) {
  return -kEulerGamma - std::log(-std::log(rng.uniform_open()));
}

}  // namespace assort
