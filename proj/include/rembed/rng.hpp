#pragma once

#include <cstdint>
#include <random>

namespace rembed {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x5EEDF0CEULL;

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of run `index` under `master`; streams are independent of worker count.
constexpr std::uint64_t run_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ mix64(index + 0x632BE59BD9B4E019ULL));
}

inline Rng run_stream(std::uint64_t master, std::uint64_t index) {
  return Rng{run_seed(master, index)};
}

/// Uniform integer in [0, bound).
inline std::size_t uniform_index(Rng& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>{0, bound - 1}(rng);
}

}  // namespace rembed
