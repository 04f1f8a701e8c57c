#pragma once

#include <cstdint>
#include <random>

namespace seaweed {

// SplitMix64 finalizer; used to derive independent per-trial and per-record
// seeds from one user seed.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return mix_seed(mix_seed(base) ^ (stream * 0xd1b54a32d192ed03ULL + 1));
}

// Uniform integer in [-bound, bound]. std::uniform_int_distribution is
// implementation-defined, so the mapping is done here to keep results
// identical across standard libraries.
inline std::int64_t uniform_symmetric(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t span = 2 * bound + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = gen();
  } while (draw >= limit);
  return static_cast<std::int64_t>(draw % span) - static_cast<std::int64_t>(bound);
}

}  // namespace seaweed
