#pragma once

#include <cstdint>

namespace vcsp {

// splitmix64 finalizer; full-period mixing of a 64-bit state.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
  return splitmix64(seed ^ (0x9e3779b97f4a7c15ULL + splitmix64(value)));
}

// Counter-based uniform draw in [0,1). Draw i of stream `seed` is a pure
// function of (seed, i), so consumers may evaluate draws in any order (or in
// parallel) and still agree bit-for-bit.
inline double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(hash_combine(seed, counter) >> 11) * 0x1.0p-53;
}

// Small sequential PRNG over the same mixer, for test data and demos.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in [lo,hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0,n)
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace vcsp
