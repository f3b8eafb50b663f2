#ifndef TRACKBA_RNG_HPP
#define TRACKBA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string_view>

namespace trackba {

// Deterministic, platform-independent PRNG (splitmix64). std::uniform_*
// distributions are implementation-defined, so every random draw in the
// library goes through this generator instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal via Box-Muller; caches the second deviate.
  double gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// Derives an independent stream seed from a root seed and a stream name
// (FNV-1a over the name, mixed with the root). Stages re-derive their own
// streams so they stay reproducible in isolation.
inline std::uint64_t substream(std::uint64_t root, std::string_view name) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (const char c : name) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
    h *= 0x100000001B3ull;
  }
  Rng mix(root ^ h);
  return mix.next();
}

inline std::uint64_t substream(std::uint64_t root, std::string_view name,
                               std::uint64_t index) {
  Rng mix(substream(root, name) ^ (0x9E3779B97F4A7C15ull * (index + 1)));
  return mix.next();
}

}  // namespace trackba

#endif  // TRACKBA_RNG_HPP
