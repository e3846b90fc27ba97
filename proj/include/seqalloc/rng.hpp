#pragma once

#include <cstdint>
#include <random>

namespace seqalloc {

// splitmix64 output function (Steele, Lea & Flood 2014). splitmix64_at(s, k)
// is the k-th output of the splitmix64 stream seeded with s; consecutive
// outputs are the seed-derivation scheme for the simulation harness, so
// per-trial streams can be opened in any order and in parallel.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k) {
  return splitmix64(seed + k * 0x9E3779B97F4A7C15ULL);
}

// Stream slots: slot 0 seeds instance generation, slot 1+i seeds trial i.
inline std::uint64_t instance_seed(std::uint64_t master_seed) {
  return splitmix64_at(master_seed, 0);
}

inline std::uint64_t trial_seed(std::uint64_t master_seed, int trial_index) {
  return splitmix64_at(master_seed, 1 + static_cast<std::uint64_t>(trial_index));
}

// 53-bit uniform in the open interval (0, 1); never returns an endpoint.
inline double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

}  // namespace seqalloc
