#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace mtcgp {

using Rng = std::mt19937_64;

// Uniform draw in [0, 1) built from the top 53 bits, so 1.0 is never returned.
inline double unit_uniform(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Mixes a base seed with a path of indices (generation, offspring, episode...)
// into an independent stream seed.
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(base);
  for (auto part : path) {
    h = splitmix64(h ^ splitmix64(part + 0x632be59bd9b4e019ULL));
  }
  return h;
}

}  // namespace mtcgp
