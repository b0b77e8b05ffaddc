#pragma once

#include <cstdint>
#include <vector>

namespace clonelab {

// Fixed randomness contract used by every sampling routine in the library:
// per-trial streams are splitmix64 generators whose initial state is derived
// from (seed, trial index), draws inside a trial happen in documented order
// (voters ascending, then families ascending), bounded integers come from
// rejection sampling on the raw 64-bit output, and permutations from a
// descending Fisher-Yates shuffle. Identical (seed, trial) pairs therefore
// produce identical results on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 mix(seed ^ (0xD1B54A32D192ED03ull * (trial + 1)));
  std::uint64_t s0 = mix.next();
  return SplitMix64(s0);
}

// Unbiased draw from [0, n).
inline std::uint64_t bounded(SplitMix64& g, std::uint64_t n) {
  std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = g.next();
    if (r >= threshold) return r % n;
  }
}

template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& g) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(bounded(g, i));
    T tmp = v[i - 1];
    v[i - 1] = v[j];
    v[j] = tmp;
  }
}

template <typename T>
std::vector<T> random_permutation(int k, SplitMix64& g) {
  std::vector<T> p(k);
  for (int i = 0; i < k; ++i) p[i] = static_cast<T>(i);
  shuffle(p, g);
  return p;
}

}  // namespace clonelab
