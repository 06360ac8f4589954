#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace netent {

// Every stochastic routine draws through the helpers below rather than
// std::*_distribution, whose output is implementation-defined. Identical
// seeds therefore give identical graphs and samples on any platform.
using rng_engine = std::mt19937_64;

namespace detail {

// Unbiased integer in [0, bound); Lemire multiply-shift with rejection.
inline std::uint64_t uniform_below(rng_engine& rng, std::uint64_t bound) {
  unsigned __int128 product = static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    while (low < threshold) {
      product = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

// Uniform double in [0, 1) built from 53 random bits.
inline double uniform_unit(rng_engine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool flip(rng_engine& rng, double probability) {
  return uniform_unit(rng) < probability;
}

// First `count` entries of a random permutation of 0..population-1.
inline std::vector<std::uint32_t> sample_indices(rng_engine& rng,
                                                 std::uint32_t population,
                                                 std::uint32_t count) {
  std::vector<std::uint32_t> pool(population);
  std::iota(pool.begin(), pool.end(), 0u);
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto j = i + static_cast<std::uint32_t>(uniform_below(rng, population - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace detail
}  // namespace netent
