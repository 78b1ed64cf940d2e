#include "hsnet/rng.hpp"

#include <cmath>

namespace hsnet {

double Rng::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  const double r = lo + (hi - lo) * uniform01();
  return r < hi ? r : std::nextafter(hi, lo);
}

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % n;
  }
}

Rng Rng::fork(std::uint64_t salt) const {
  // splitmix64 finalizer over (seed, salt)
  std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return Rng(z ^ (z >> 31));
}

}  // namespace hsnet
