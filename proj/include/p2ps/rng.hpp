#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace p2ps {

/// splitmix64 mixing step. Used to derive independent sub-stream seeds from a
/// single master seed without correlated low bits.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Named random sub-streams of one run. Topology generation, server placement
/// and the join sequence draw from separate streams, so two runs that share a
/// seed see the same environment even when they consume different amounts of
/// randomness elsewhere.
enum class SeedStream : std::uint64_t {
  Topology = 0x746f706fULL,
  Placement = 0x706c6163ULL,
  Joins = 0x6a6f696eULL,
};

inline std::uint64_t derive_seed(std::uint64_t master, SeedStream stream) {
  return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(stream)));
}

/// Uniform integer in [0, bound). Hand-rolled rejection sampling so that
/// results depend only on the mt19937_64 engine (which the standard pins down
/// bit-exactly) and not on the standard library's distribution code.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t min = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= min) return r % bound;
  }
}

/// Uniform integer in [lo, hi], inclusive.
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(
                  rng, static_cast<std::uint64_t>(hi) - lo + 1));
}

}  // namespace p2ps
