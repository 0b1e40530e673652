#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

// Deterministic randomness helpers. Everything here is a pure function of
// its seed so that runs reproduce bit-for-bit across platforms; std::shuffle
// and the standard distributions are avoided because their output is
// implementation-defined.

namespace gencospark {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives an independent sub-seed from a master seed and a label path
/// (e.g. {level, trial, salt}).
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = seed;
  splitmix64(s);
  for (std::uint64_t p : path) {
    s ^= p + 0x9e3779b97f4a7c15ULL;
    splitmix64(s);
  }
  return splitmix64(s);
}

/// Maps a raw 64-bit draw onto [0, bound). Multiply-shift keeps the mapping
/// deterministic; the bias is below 2^-40 for the bounds used here.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

/// Fisher-Yates with explicit draws; same seed yields the same permutation
/// on every platform.
inline void seeded_shuffle(std::vector<int>& values, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(bounded_draw(rng, i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace gencospark
