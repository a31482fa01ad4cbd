#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace betavote {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based child seed: the i-th stream of `seed` does not depend on how
// many other streams were drawn, so serial and parallel runs agree.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

// Uniform on [0, bound). Rejection sampling over the raw engine output, so
// results are identical across standard library implementations (unlike
// std::uniform_int_distribution).
inline std::size_t uniform_index(Rng& rng, std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % b);
}

// Uniform on [lo, hi].
inline std::size_t uniform_between(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + uniform_index(rng, hi - lo + 1);
}

template <typename Vec>
void shuffle(Vec& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    auto j = uniform_index(rng, i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace betavote
