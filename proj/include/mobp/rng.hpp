#ifndef MOBP_RNG_HPP
#define MOBP_RNG_HPP

#include <cstdint>
#include <random>
#include <span>
#include <utility>

#include "rational.hpp"

namespace mobp {

/// SplitMix64 finalizer; used to derive independent seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/**
 * Seedable random stream with output identical on every platform.
 *
 * The engine is std::mt19937_64, whose sequence is fixed by the standard.
 * The standard distributions are not, so bounded integers, Bernoulli
 * trials and shuffles are implemented here directly on the raw 64-bit
 * output.
 *
 * Substreams: substream(seed, a, b) seeds the engine with
 * splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b). The sweep uses
 * (a, b) = (level index, repetition index), so every constructed solution
 * owns its stream regardless of how the work is scheduled.
 */
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  static Rng substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    Rng rng(0);
    rng.engine_.seed(splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b));
    return rng;
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return UINT64_MAX; }
  result_type operator()() { return engine_(); }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Reject the low 2^64 mod bound values so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// True with probability p, for p in [0, 1]; exact for rational p.
  bool bernoulli(const Rational& p) {
    if (p <= Rational(0)) return false;
    if (p >= Rational(1)) return true;
    return below(static_cast<std::uint64_t>(p.den())) < static_cast<std::uint64_t>(p.num());
  }

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = below(i);
      using std::swap;
      swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mobp

#endif  // MOBP_RNG_HPP
