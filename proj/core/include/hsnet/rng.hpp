#pragma once

#include <cstdint>
#include <random>

namespace hsnet {

/**
 * Seeded pseudo-random stream used for initialization, shuffling, dropout
 * masks and subsetting.
 *
 * The engine is std::mt19937_64 seeded with `seed` directly; its output
 * sequence is fixed by the C++ standard (the 10000th output for the default
 * seed is 9981545732273789042), so streams are identical on every conforming
 * platform. All derived draws use the conversions below rather than the
 * implementation-defined std distributions:
 *
 *   uniform01()      = (next() >> 11) * 2^-53            in [0, 1)
 *   uniform(lo, hi)  = lo + (hi - lo) * uniform01()      clamped below hi
 *   below(n)         = next() mod n, rejecting next() < (2^64 - n) mod n
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next() { return engine_(); }
  double uniform01();
  /// Requires lo < hi (checked by callers that take user input).
  double uniform(double lo, double hi);
  /// Unbiased integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);

  /// Child stream for an independent purpose; deterministic in (seed, salt).
  [[nodiscard]] Rng fork(std::uint64_t salt) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace hsnet
